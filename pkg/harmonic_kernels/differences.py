"""Five point central differences with one Richardson step."""
from __future__ import absolute_import, division


def default_step(x):
    return max(1e-4, 1e-3 * abs(x))


def _first(f, x, h):
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h)


def _second(f, x, h):
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h)


def _richardson(coarse, fine):
    return (16 * fine - coarse) / 15


def derivative(f, x, h=None):
    h = default_step(x) if h is None else h
    return _richardson(_first(f, x, h), _first(f, x, h / 2))


def second_derivative(f, x, h=None):
    h = default_step(x) if h is None else h
    return _richardson(_second(f, x, h), _second(f, x, h / 2))


def memoize(f):
    """Cache f by argument; stencils at h and h/2 share points."""
    cache = {}

    def cached(x):
        if x not in cache:
            cache[x] = f(x)
        return cache[x]

    return cached
