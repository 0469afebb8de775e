"""Source bag to target bags through a bilingual lexicon.

An entry ``{ source signs } => { target signs }`` consumes a set of source
signs (same words, unifiable categories) and emits its target signs under
the resulting unifier, which is how indices cross from one language to the
other.  Every way of covering the source bag exactly once is enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import TransferError
from .grammar import Bag, BilingualEntry, Sign
from .terms import apply, canonical, fresh_counter, standardize_apart, unify


@dataclass(frozen=True)
class TransferResult:
    bag: Bag
    # (entry index, 1-based source positions matched by its source signs)
    trace: tuple[tuple[int, tuple[int, ...]], ...]


def _sign_matches(pattern: Sign, sign: Sign, s):
    if pattern.phon != sign.phon:
        return None
    return unify(pattern.category, sign.category, s)


def transfer(src: Bag, lexicon) -> list[TransferResult]:
    """All distinct target bags for ``src``.

    Target signs are ordered by the first source position their entry
    consumed, then by their order inside the entry.
    """
    lexicon = list(lexicon)
    if not lexicon:
        raise TransferError("empty bilingual lexicon")
    for pos, sign in enumerate(src, 1):
        if not any(_sign_matches(p, sign, {}) is not None
                   for e in lexicon for p in e.source):
            raise TransferError(f"no bilingual entry matches sign {pos}: {sign}")

    stamps = fresh_counter()
    n = len(src)
    results: list[TransferResult] = []
    seen = set()
    dead_ends: set[int] = set()

    def search(used: int, s, matches):
        if used == (1 << n) - 1:
            signs = []
            for entry, _ in matches:
                signs.extend(apply(s, entry.target))
            bag = Bag(tuple(signs))
            key = canonical(bag)
            if key not in seen:
                seen.add(key)
                results.append(TransferResult(bag, tuple(t for _, t in matches)))
            return
        anchor = next(i for i in range(n) if not used >> i & 1)
        progressed = False
        for ix, entry in enumerate(lexicon):
            entry = standardize_apart(entry, stamps)
            free = [i for i in range(n) if not used >> i & 1 and i != anchor]
            k = len(entry.source)
            if k - 1 > len(free):
                continue
            for slot in range(k):
                # the anchor fills ``slot``; the other patterns take free signs
                for others in permutations(free, k - 1):
                    chosen = list(others[:slot]) + [anchor] + list(others[slot:])
                    s2 = s
                    for pattern, i in zip(entry.source, chosen):
                        s2 = _sign_matches(pattern, src[i], s2)
                        if s2 is None:
                            break
                    if s2 is None:
                        continue
                    progressed = True
                    mask = used
                    for i in chosen:
                        mask |= 1 << i
                    positions = tuple(i + 1 for i in chosen)
                    search(mask, s2, matches + [(entry, (ix, positions))])
        if not progressed:
            dead_ends.add(anchor + 1)

    search(0, {}, [])
    if not results:
        where = ", ".join(f"{p}: {src[p - 1]}" for p in sorted(dead_ends))
        raise TransferError(f"no complete transfer of the bag; stuck at sign {where}")
    return results
