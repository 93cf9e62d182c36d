"""
Common mocks for external services in tests.

This module provides reusable mocks for:
- oeis.org b-file downloads
"""
from unittest.mock import Mock

import requests

SAMPLE_BFILE = """# A000108 (Catalan numbers)
0 1
1 1
2 2
3 5
4 14
5 42
"""


def mock_bfile_response(text: str = SAMPLE_BFILE, status: int = 200) -> Mock:
    """Mock ``requests.get`` response carrying a b-file body."""
    response = Mock()
    response.status_code = status
    response.text = text
    if status >= 400:
        response.raise_for_status = Mock(side_effect=requests.HTTPError(f"{status} Error"))
    else:
        response.raise_for_status = Mock(return_value=None)
    return response
