"""Search derivations for the reduct lemmas used by block normalization and
write them to src/invsemi/lemma_data.py.

Each lemma is an identity between pattern words over single-letter
variables; its proof uses only the plain identities 4e, 6a and 6b, so it can
be instantiated by substituting nonempty words for the variables.
"""

import argparse
import pprint
from pathlib import Path

from invsemi.rules import search_derivation, system_a0, verify_trace
from invsemi.words import render, word

LEMMAS = {
    # swap two adjacent factors strictly between two copies of x
    "swap": ("xuabwx", "xubawx"),
    "swap-u": ("xabwx", "xbawx"),
    "swap-w": ("xuabx", "xubax"),
    # square a factor strictly between two copies of x
    "square": ("xuawx", "xuaawx"),
    "square-u": ("xawx", "xaawx"),
    "square-w": ("xuax", "xuaax"),
    "square-uw": ("xax", "xaax"),
    # drop an inner copy of x
    "drop": ("xuxwx", "xuwx"),
    "drop-u": ("xxwx", "xwx"),
    "drop-w": ("xuxx", "xux"),
    "drop-uw": ("xxx", "xx"),
    # exchange the outer letter with the first inner square
    "outer": ("xaawx", "axxwa"),
    "outer-w": ("xaax", "axxa"),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-len", type=int, default=9)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parents[1] / "src/invsemi/lemma_data.py"))
    args = ap.parse_args()
    system = system_a0()
    names = [n for n in system.names() if n[:2] in ("4e", "6a", "6b") and not n.endswith("*")]
    data = {}
    for key, (lhs, rhs) in LEMMAS.items():
        tr = search_derivation(word(lhs), word(rhs), system, names, max_len=args.max_len)
        if tr is None or not verify_trace(tr, system):
            raise SystemExit(f"no derivation found for {key}")
        data[key] = {
            "lhs": lhs,
            "rhs": rhs,
            "steps": [(s.rule, s.direction, s.position,
                       {k: render(v) for k, v in sorted(s.subst.items())}) for s in tr.steps],
        }
        print(f"{key:10s} {lhs} -> {rhs}: {len(tr.steps)} steps")
    body = pprint.pformat(data, width=100, sort_dicts=True)
    Path(args.out).write_text(
        '"""Stored derivations of the block lemmas (generated by scripts/find_lemmas.py)."""\n\n'
        f"LEMMAS = {body}\n")


if __name__ == "__main__":
    main()
