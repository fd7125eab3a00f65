# The MIT License (MIT)
# Copyright (c) 2024-present juntaid3 developers
#
# Permission is hereby granted, free of charge, to any person obtaining a
# copy of this software and associated documentation files (the "Software"),
# to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense,
# and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS
# OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
# DEALINGS IN THE SOFTWARE.

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Any, Final

try:
    import orjson

    _has_orjson: bool = True
except ImportError:
    import json

    _has_orjson = False


__all__: Final[tuple[str, ...]] = ("json_loads", "json_dumps")


def json_loads(data: str | bytes) -> Any:
    """Loads a json document into a python object.

    Parameters
    ----------
    data:
        The json document to load.

    Raises
    ------
    :exc:`ValueError`
        The text provided is not valid json
    """
    if _has_orjson:
        return orjson.loads(data)
    return json.loads(data)


def json_dumps(to_dump: Any, *, indent: bool = False) -> str:
    """Dumps a python object into a json string.

    Keys are sorted so the same object always produces the same text.

    Parameters
    ----------
    to_dump:
        The python object to dump. Numpy scalars are not supported, convert them first.
    indent:
        Whether to pretty print with 2 spaces of indentation.
    """
    if _has_orjson:
        option = orjson.OPT_SORT_KEYS
        if indent:
            option |= orjson.OPT_INDENT_2
        return orjson.dumps(to_dump, option=option).decode("utf-8")
    return json.dumps(to_dump, sort_keys=True, indent=2 if indent else None)
