"""Named small entropoids used by the tables, tests and demos."""

from __future__ import annotations

from typing import Optional

from .algebra import Element, EntropoidParams, params_new

# name -> (p, a3, a8, b2, b7)
PRESETS = {
    "e7": (7, 6, 3, 3, 4),
    "e11": (11, 9, 1, 8, 9),
    "e13": (13, 10, 2, 3, 9),
    "e19": (19, 18, 11, 14, 10),
    "e23": (23, 15, 13, 9, 14),
    "e49223": (49223, 33170, 13052, 12476, 19648),
}

# a known generator of E* for presets where one is fixed
GENERATORS = {
    "e7": Element(0, 2),
    "e11": Element(0, 3),
    "e49223": Element(21287, 34883),
}


def preset(name: str, backend_name: Optional[str] = None) -> EntropoidParams:
    try:
        p, a3, a8, b2, b7 = PRESETS[name.lower()]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; have {sorted(PRESETS)}") from None
    return params_new(p, a3, a8, b2, b7, backend_name=backend_name)
