#!/usr/bin/env python3
"""Re-verify certificate files with sympy, independently of the C++ engine."""
import sys

import sympy


def check_line(line):
    lhs, sep, rhs = line.partition("=")
    if not sep or not rhs.strip():
        raise ValueError("missing '='")
    lhs = sympy.sympify(lhs.replace("^", "**"))
    rhs = sympy.sympify(rhs.replace("^", "**"))
    return sympy.expand(lhs - rhs) == 0


def main(paths):
    if not paths:
        print("usage: check_cert.py FILE...", file=sys.stderr)
        return 2
    code = 0
    for path in paths:
        with open(path) as f:
            lines = [l for l in f.read().splitlines() if l.strip()]
        if not lines:
            print(f"{path}: no certificate lines", file=sys.stderr)
            return 2
        for n, line in enumerate(lines, 1):
            if not check_line(line):
                print(f"FAIL {path}:{n}")
                code = 1
    return code


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
