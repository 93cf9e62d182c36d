"""OEIS b-file parsing, vendored fixtures and an opt-in network fetch."""
import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import requests

from ..utils.config import settings
from ..utils.exceptions import FixtureMissing, ParseError
from ..utils.logger import oeis_logger

ANUMBER_RE = re.compile(r"^A(\d{6})$")
LINE_RE = re.compile(r"^(-?\d+)\s+(-?\d+)$")


def normalize_anumber(anumber: str) -> str:
    """Accept ``A000108``, ``a108`` or ``108`` and return ``A000108``."""
    text = anumber.strip().upper().lstrip("A")
    if not text.isdigit() or len(text) > 6:
        raise ValueError(f"not an OEIS A-number: {anumber!r}")
    return f"A{int(text):06d}"


@dataclass(frozen=True)
class BFile:
    anumber: str
    entries: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if not ANUMBER_RE.match(self.anumber):
            raise ValueError(f"not an OEIS A-number: {self.anumber!r}")
        for (i, _), (j, _) in zip(self.entries, self.entries[1:]):
            if j <= i:
                raise ValueError(f"{self.anumber}: indices must increase ({i} then {j})")

    @property
    def offset(self) -> int:
        return self.entries[0][0] if self.entries else 0

    def values(self, count: Optional[int] = None) -> List[int]:
        values = [v for _, v in self.entries]
        return values if count is None else values[:count]

    def value_at(self, index: int) -> int:
        for i, v in self.entries:
            if i == index:
                return v
        raise KeyError(f"{self.anumber} has no term with index {index}")

    def __len__(self) -> int:
        return len(self.entries)


def parse_bfile(anumber: str, text: str) -> BFile:
    """Parse ``index value`` lines; blank lines and '#' comments are skipped."""
    entries = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = LINE_RE.match(line)
        if not match:
            raise ParseError(line_number, raw)
        entries.append((int(match.group(1)), int(match.group(2))))
    try:
        return BFile(normalize_anumber(anumber), tuple(entries))
    except ValueError as e:
        raise ParseError(0, str(e)) from e


class OEISClient:
    """Loads b-files from a cache directory, fetching from oeis.org only when allowed."""

    def __init__(
        self,
        cache_dir: Optional[str] = None,
        base_url: Optional[str] = None,
        timeout: Optional[float] = None,
    ):
        self.cache_dir = Path(cache_dir or settings.oeis_cache_dir)
        self.base_url = (base_url or settings.oeis_base_url).rstrip("/")
        self.timeout = timeout if timeout is not None else settings.oeis_timeout

    def fixture_path(self, anumber: str) -> Path:
        return self.cache_dir / f"b{normalize_anumber(anumber)[1:]}.txt"

    def url(self, anumber: str) -> str:
        anumber = normalize_anumber(anumber)
        return f"{self.base_url}/{anumber}/b{anumber[1:]}.txt"

    def fetch(self, anumber: str) -> BFile:
        """Download, validate and cache a b-file."""
        url = self.url(anumber)
        oeis_logger.info(f"Fetching {url}")
        response = requests.get(url, timeout=self.timeout)
        response.raise_for_status()
        bfile = parse_bfile(anumber, response.text)
        path = self.fixture_path(anumber)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(response.text)
        oeis_logger.debug(f"Cached {len(bfile)} terms of {bfile.anumber} at {path}")
        return bfile

    def load(self, anumber: str, fetch: bool = False) -> BFile:
        path = self.fixture_path(anumber)
        if path.exists():
            return parse_bfile(anumber, path.read_text())
        if not fetch:
            raise FixtureMissing(f"no fixture for {normalize_anumber(anumber)} in {self.cache_dir}")
        return self.fetch(anumber)


def oeis_load(anumber: str, fetch: bool = False, cache_dir: Optional[str] = None) -> BFile:
    return OEISClient(cache_dir=cache_dir).load(anumber, fetch=fetch)


def compare_terms(expected: Sequence[int], actual: Sequence, terms: int) -> Optional[Tuple[int, int, object]]:
    """First (index, expected, actual) mismatch over the first ``terms`` values."""
    if len(expected) < terms or len(actual) < terms:
        return (min(len(expected), len(actual)), None, None)
    for i in range(terms):
        if expected[i] != actual[i]:
            return (i, expected[i], actual[i])
    return None
