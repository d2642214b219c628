#!/usr/bin/env python3
"""Writes fixtures/family{1,2}/a{K}.json from the closed-form family data.

Independent of the C++ code: the classes are rebuilt here from the formulas and
every fixture is checked with plain integer arithmetic before it is written.

    python3 tools/gen_fixtures.py [--out fixtures]
"""

import argparse
import json
import math
from pathlib import Path

FIXTURE_VERSION = 1


def dot(x, y):
    return x[0] * y[0] - sum(a * b for a, b in zip(x[1:], y[1:]))


def unit(n, i):
    v = [0] * (n + 1)
    v[i] = 1
    return v


def sub(x, y):
    return [a - b for a, b in zip(x, y)]


def family_data(family, a):
    if family == 1:
        n, p = 3 * a + 2, 4 * a - 9
        long_cls = [a + 3, -(a - 1)] + [-2] * (n - 2) + [-1]
        K = [3] + [-1] * n
        m = a + 3
        H = [8 * a - 1, -2 * m] + [-m] * (n - 1)
        handles = {"h2": 13 - a, "h3": 2} if a <= 6 else None
    else:
        n, p = 3 * a + 4, 4 * a - 7
        long_cls = [a + 3, 1, 1, -(a - 1)] + [-2] * (n - 4) + [-1]
        K = [3, 1, 1] + [-1] * (n - 2)
        m = a + 3
        H = [8 * a + 1, m, m, -2 * m] + [-m] * (n - 3)
        # At a = 6 one 1-handle survives.
        handles = {"h2": 11 - a, "h3": 0} if a <= 5 else {"h1": 1, "h2": 6, "h3": 0}
    body = [sub(unit(n, 12 - a + i), unit(n, 13 - a + i)) for i in range(1, p - 1)]
    delta = sub(unit(n, 12 - a), unit(n, 13 - a))
    return n, p, body + [long_cls], K, H, delta, handles


def stated_handle_tuple(family, a):
    """Published decompositions, written independently of the handle inputs."""
    if family == 1:
        return [1, 0, 14 - a, 2, 1] if a <= 6 else None
    if a <= 5:
        return [1, 0, 12 - a, 0, 1]
    return [1, 1, 13 - a, 0, 1] if a == 6 else None


def check(p, classes, K, H, delta):
    for i, u in enumerate(classes):
        for j, v in enumerate(classes):
            if i == j:
                want = -(p + 2) if i == p - 2 else -2
            elif abs(i - j) == 1:
                want = 1
            else:
                want = 0
            assert dot(u, v) == want, (i, j, dot(u, v), want)
    assert all(c % 2 for c in K)
    kp = [dot(K, u) for u in classes]
    assert kp[:-1] == [0] * (p - 2) and abs(kp[-1]) == p
    assert all(dot(H, u) == 0 for u in classes) and dot(H, H) > 0 and H[0] > 0
    dp = [dot(delta, u) for u in classes]
    if dp[0] == 1 and all(x == 0 for x in dp[1:]):
        return 1
    if all(x == 0 for x in dp[:-1]) and math.gcd(dp[-1], p) == 1:
        return 2
    raise AssertionError("delta meets neither H_1 condition")


def row(v):
    return "[" + ", ".join(str(c) for c in v) + "]"


def render(family, a):
    n, p, classes, K, H, delta, handles = family_data(family, a)
    cond = check(p, classes, K, H, delta)
    expected = stated_handle_tuple(family, a)
    lines = [
        "{",
        f'  "fixture_version": {FIXTURE_VERSION},',
        f'  "family": {family},',
        f'  "a": {a},',
        f'  "p": {p},',
        f'  "n": {n},',
        '  "classes": [',
        ",\n".join("    " + row(u) for u in classes),
        "  ],",
        f'  "K": {row(K)},',
        f'  "H": {row(H)},',
        f'  "delta": {row(delta)},',
        f'  "delta_condition": {cond},',
        f'  "handles": {json.dumps(handles)},',
        f'  "expected_handle_counts": {json.dumps(expected)}',
        "}",
    ]
    text = "\n".join(lines) + "\n"
    json.loads(text)
    return text


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "fixtures"))
    args = ap.parse_args()
    out = Path(args.out)
    for family, a_range in ((1, range(3, 8)), (2, range(3, 7))):
        d = out / f"family{family}"
        d.mkdir(parents=True, exist_ok=True)
        for a in a_range:
            (d / f"a{a}.json").write_text(render(family, a))
    print(f"wrote fixtures under {out}")


if __name__ == "__main__":
    main()
