"""Python access to the plsurf commands.

Every function takes and returns JSON documents as Python objects and raises
``PlsurfError`` on invalid input.
"""

import json

from . import _plsurf

__all__ = [
    "PlsurfError",
    "path_reduce",
    "path_sig",
    "surface_sig",
    "thin_equiv",
    "triangulate",
    "gen_example",
]


class PlsurfError(ValueError):
    def __init__(self, code, message):
        super().__init__(message.strip())
        self.code = code


def _unpack(result, ok=(0,)):
    code, out, err = result
    if code not in ok:
        raise PlsurfError(code, err)
    return code, json.loads(out)


def _dump(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def path_reduce(doc):
    return _unpack(_plsurf.path_reduce(_dump(doc)))[1]


def path_sig(doc, level=4):
    return _unpack(_plsurf.path_sig(_dump(doc), level))[1]


def surface_sig(doc, level=4, weight=6, threads=1):
    return _unpack(_plsurf.surface_sig(_dump(doc), level, weight, threads))[1]


def thin_equiv(x, y=None, level=4, weight=6, threads=1):
    """Returns the decision report; its "verdict" is "equal" or "not_equal"."""
    y = None if y is None else _dump(y)
    return _unpack(_plsurf.thin_equiv(_dump(x), y, level, weight, threads), ok=(0, 1))[1]


def triangulate(doc, threads=1):
    return _unpack(_plsurf.triangulate(_dump(doc), threads))[1]


def gen_example(name):
    return _unpack(_plsurf.gen_example(name))[1]
