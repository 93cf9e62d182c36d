"""
Tests for OEIS b-file parsing, fixtures and the opt-in fetch.
"""
from unittest.mock import patch

import pytest
import requests

from src.oeis.bfile import BFile, OEISClient, compare_terms, normalize_anumber, oeis_load, parse_bfile
from src.utils.exceptions import FixtureMissing, ParseError
from src.verification import golden
from tests.utils.mocks import SAMPLE_BFILE, mock_bfile_response


class TestParsing:
    """Test b-file parsing."""

    def test_parse(self):
        bfile = parse_bfile("A000108", SAMPLE_BFILE)
        assert bfile.anumber == "A000108"
        assert bfile.offset == 0
        assert bfile.values() == [1, 1, 2, 5, 14, 42]
        assert bfile.values(3) == [1, 1, 2]
        assert bfile.value_at(4) == 14
        assert len(bfile) == 6

    def test_blank_lines_and_negative_values(self):
        bfile = parse_bfile("35929", "\n# comment\n1 -1\n\n2 0\n3   7\n")
        assert bfile.anumber == "A035929"
        assert bfile.offset == 1
        assert bfile.values() == [-1, 0, 7]

    def test_bad_line_reports_line_number(self):
        with pytest.raises(ParseError) as exc_info:
            parse_bfile("A000108", "0 1\n1 1\n2 two\n")
        assert exc_info.value.line_number == 3

    def test_decreasing_indices(self):
        with pytest.raises(ParseError):
            parse_bfile("A000108", "0 1\n2 2\n1 1\n")

    def test_missing_index(self):
        with pytest.raises(KeyError):
            parse_bfile("A000108", SAMPLE_BFILE).value_at(9)

    @pytest.mark.parametrize("text,expected", [("A000108", "A000108"), ("a108", "A000108"), ("81696", "A081696")])
    def test_normalize(self, text, expected):
        assert normalize_anumber(text) == expected

    @pytest.mark.parametrize("text", ["B000108", "A1234567", ""])
    def test_normalize_rejects(self, text):
        with pytest.raises(ValueError):
            normalize_anumber(text)

    def test_bfile_validates_anumber(self):
        with pytest.raises(ValueError):
            BFile("X1", ())


class TestFixtures:
    """Test loading the vendored fixtures."""

    def test_vendored_fixture(self, fixture_dir):
        values = OEISClient(cache_dir=str(fixture_dir)).load("A081696").values(10)
        assert values == golden.A081696_PREFIX

    def test_default_cache_dir(self):
        assert oeis_load("A000108").values(6) == [1, 1, 2, 5, 14, 42]

    def test_fixture_path(self, tmp_path):
        client = OEISClient(cache_dir=str(tmp_path))
        assert client.fixture_path("a108") == tmp_path / "b000108.txt"

    def test_every_fixture_has_twenty_terms(self, fixture_dir):
        paths = sorted(fixture_dir.glob("b*.txt"))
        assert paths
        for path in paths:
            bfile = parse_bfile(path.stem[1:], path.read_text())
            assert len(bfile) >= 20, path.name

    def test_missing_fixture_without_fetch(self, tmp_path):
        with pytest.raises(FixtureMissing):
            OEISClient(cache_dir=str(tmp_path)).load("A000108")


class TestFetch:
    """Test the network fetch with a mocked transport."""

    def test_url(self):
        client = OEISClient(base_url="https://oeis.org/")
        assert client.url("A108") == "https://oeis.org/A000108/b000108.txt"

    @patch("src.oeis.bfile.requests.get")
    def test_fetch_caches(self, mock_get, tmp_path):
        mock_get.return_value = mock_bfile_response()
        client = OEISClient(cache_dir=str(tmp_path / "cache"), timeout=5)

        bfile = client.load("A000108", fetch=True)

        assert bfile.values() == [1, 1, 2, 5, 14, 42]
        mock_get.assert_called_once_with(client.url("A000108"), timeout=5)
        assert client.fixture_path("A000108").read_text() == SAMPLE_BFILE

        # Second load reads the cache
        client.load("A000108", fetch=True)
        assert mock_get.call_count == 1

    @patch("src.oeis.bfile.requests.get")
    def test_fetch_http_error(self, mock_get, tmp_path):
        mock_get.return_value = mock_bfile_response(status=404)
        client = OEISClient(cache_dir=str(tmp_path))

        with pytest.raises(requests.HTTPError):
            client.fetch("A999999")
        assert not client.fixture_path("A999999").exists()

    @patch("src.oeis.bfile.requests.get")
    def test_fetch_malformed_body_not_cached(self, mock_get, tmp_path):
        mock_get.return_value = mock_bfile_response("<html>not found</html>")
        client = OEISClient(cache_dir=str(tmp_path))

        with pytest.raises(ParseError):
            client.fetch("A000108")
        assert not client.fixture_path("A000108").exists()


class TestCompareTerms:
    """Test term comparison."""

    def test_match(self):
        assert compare_terms([1, 1, 2, 5], [1, 1, 2, 5, 14], 4) is None

    def test_mismatch(self):
        assert compare_terms([1, 1, 2, 5], [1, 1, 3, 5], 4) == (2, 2, 3)

    def test_too_few_terms(self):
        assert compare_terms([1, 1], [1, 1, 2], 3) == (2, None, None)
