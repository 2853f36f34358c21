"""Size caps for the exponential searches.

Each cap bounds the order of the input graph for one family of searches.
Caps can be overridden globally (``set_caps``) or temporarily
(``caps_override``); the harness applies the ``[caps]`` table of a sweep
config this way.
"""

from __future__ import annotations

from contextlib import contextmanager

DEFAULT_CAPS = {
    "alpha": 512,
    "gamma": 512,
    "alpha_k": 512,
    "chi": 64,
    "alphaF": 30,
    "max_induced": 22,
    "planarity": 64,
    "canon": 512,
}

_caps = dict(DEFAULT_CAPS)


class SizeCapExceeded(RuntimeError):
    def __init__(self, name: str, n: int, cap: int):
        super().__init__(f"{name}: order {n} exceeds cap {cap}")
        self.name = name
        self.n = n
        self.cap = cap


def cap(name: str) -> int:
    return _caps[name]


def check_cap(name: str, n: int) -> None:
    if n > _caps[name]:
        raise SizeCapExceeded(name, n, _caps[name])


def set_caps(**caps: int) -> None:
    unknown = set(caps) - set(DEFAULT_CAPS)
    if unknown:
        raise KeyError(f"unknown caps: {sorted(unknown)}")
    _caps.update({k: int(v) for k, v in caps.items()})


def reset_caps() -> None:
    _caps.clear()
    _caps.update(DEFAULT_CAPS)


@contextmanager
def caps_override(**caps: int):
    saved = dict(_caps)
    set_caps(**caps)
    try:
        yield
    finally:
        _caps.clear()
        _caps.update(saved)
