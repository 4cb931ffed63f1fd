#!/usr/bin/env python3
"""Dev-only: Mathieu-group generators from the extended ternary Golay code.

Chain of verified constructions:

  * the [12,6,6] self-dual ternary Golay code (Paley construction over F5),
    checked by self-orthogonality and its weight distribution 0/6/9/12 =
    1/264/440/24;
  * the Steiner system S(5,6,12) as the supports of the 264 weight-6
    codewords (132 blocks, every 5-set in exactly one block);
  * block-system automorphisms: images of any 5 points extend uniquely
    (sharp 5-transitivity), giving M12 generators on 12 points and, fixing
    a point, M11 generators on 11 points;
  * monomial lifts of those automorphisms to the code itself, giving the
    nonsplit double cover 2.M12 as signed permutations, re-encoded as
    ordinary permutations on 24 points.

Every generated group is enumerated and its order checked.
"""

from __future__ import annotations

from itertools import combinations, product

# quadratic residues mod 5: chi(1)=chi(4)=1, chi(2)=chi(3)=-1
_CHI5 = {0: 0, 1: 1, 2: -1, 3: -1, 4: 1}


def golay_generator_matrix() -> list[tuple[int, ...]]:
    """Rows of [I6 | B] over F3, with B the bordered Paley matrix for p=5."""
    B = [[0] * 6 for _ in range(6)]
    for j in range(1, 6):
        B[0][j] = 1
        B[j][0] = 1
    for i in range(5):
        for j in range(5):
            B[1 + i][1 + j] = _CHI5[(j - i) % 5] % 3
    rows = []
    for i in range(6):
        row = [0] * 12
        row[i] = 1
        for j in range(6):
            row[6 + j] = B[i][j] % 3
        rows.append(tuple(row))
    return rows


def all_codewords(gen_rows) -> set[tuple[int, ...]]:
    words = set()
    for coeffs in product(range(3), repeat=6):
        w = [0] * 12
        for c, row in zip(coeffs, gen_rows):
            if c:
                for i in range(12):
                    w[i] = (w[i] + c * row[i]) % 3
        words.add(tuple(w))
    return words


def check_code(words) -> dict[int, int]:
    dist: dict[int, int] = {}
    for w in words:
        wt = sum(1 for x in w if x)
        dist[wt] = dist.get(wt, 0) + 1
    assert dist == {0: 1, 6: 264, 9: 440, 12: 24}, dist
    return dist


def steiner_blocks(words) -> list[frozenset[int]]:
    blocks = {
        frozenset(i for i, x in enumerate(w) if x)
        for w in words
        if sum(1 for x in w if x) == 6
    }
    blocks = sorted(blocks, key=sorted)
    assert len(blocks) == 132
    # every 5-subset of the 12 points lies in exactly one block
    by_five: dict[frozenset, frozenset] = {}
    for b in blocks:
        for five in combinations(sorted(b), 5):
            key = frozenset(five)
            assert key not in by_five
            by_five[key] = b
    assert len(by_five) == 792
    return blocks, by_five


def _propagate(by_five, images: dict[int, int]) -> dict[int, int] | None:
    """Forced consequences of a partial map: the block through any five
    known points must go to the block through their images."""
    used = set(images.values())
    changed = True
    while changed and len(images) < 12:
        changed = False
        known = sorted(images)
        for five in combinations(known, 5):
            block = by_five[frozenset(five)]
            target = by_five[frozenset(images[p] for p in five)]
            missing = [p for p in block if p not in images]
            if not missing:
                if frozenset(images[p] for p in block) != target:
                    return None
                continue
            img = (set(target) - {images[p] for p in five}).pop()
            if img in used:
                return None
            images[missing[0]] = img
            used.add(img)
            changed = True
    return images


def complete_automorphism(by_five, images: dict[int, int]) -> tuple[int, ...] | None:
    """Extend images of >= 5 points to a full block-system automorphism.

    Propagation alone stalls once the known points close up into blocks, so
    undetermined points are branched on and pruned by block consistency.
    Sharp 5-transitivity makes the completion unique when it exists.
    """
    state = _propagate(by_five, dict(images))
    if state is None:
        return None
    if len(state) == 12:
        return tuple(state[i] for i in range(12))
    x = min(p for p in range(12) if p not in state)
    for img in (q for q in range(12) if q not in state.values()):
        result = complete_automorphism(by_five, {**state, x: img})
        if result is not None:
            return result
    return None


def is_block_automorphism(blocks, perm) -> bool:
    block_set = set(blocks)
    return all(frozenset(perm[p] for p in b) in block_set for b in blocks)


def automorphism_from_prefix(blocks, by_five, prefix_points, prefix_images):
    perm = complete_automorphism(by_five, dict(zip(prefix_points, prefix_images)))
    if perm is None or not is_block_automorphism(blocks, perm):
        return None
    return perm


def monomial_lifts(words, gen_rows, perm) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All sign vectors eps with (perm, eps) preserving the code.

    The transform sends w to w' with w'[perm[i]] = eps[perm[i]] * w[i].
    A nonsplit cover gives exactly two lifts, eps and -eps.
    """
    lifts = []
    for signs in product((1, 2), repeat=12):  # 2 = -1 mod 3
        ok = True
        for row in gen_rows:
            w = [0] * 12
            for i, x in enumerate(row):
                w[perm[i]] = (signs[perm[i]] * x) % 3
            if tuple(w) not in words:
                ok = False
                break
        if ok:
            lifts.append((perm, signs))
    return lifts


def signed_to_perm24(perm, signs) -> tuple[int, ...]:
    """Signed permutation on 12 coordinates as a permutation of 24 points.

    Point i is coordinate i with sign +, point 12+i the same coordinate
    with sign -.
    """
    images = [0] * 24
    for i in range(12):
        j = perm[i]
        if signs[j] == 1:
            images[i], images[12 + i] = j, 12 + j
        else:
            images[i], images[12 + i] = 12 + j, j
    return tuple(images)


def build_all(seed: int = 5):
    """Return verified generator sets {m12, m11, m12x2} (perm tuples)."""
    import random

    from repscreen.oracle import enumerate_group

    gen_rows = golay_generator_matrix()
    words = all_codewords(gen_rows)
    check_code(words)
    blocks, by_five = steiner_blocks(words)

    rng = random.Random(seed)

    def random_automorphisms(fixed_point=None, want=2):
        found = []
        while len(found) < want:
            pts = list(range(12))
            if fixed_point is not None:
                pts.remove(fixed_point)
                prefix_points = [fixed_point] + rng.sample(pts, 4)
                prefix_images = [fixed_point] + rng.sample(pts, 4)
            else:
                prefix_points = rng.sample(pts, 5)
                prefix_images = rng.sample(pts, 5)
            perm = automorphism_from_prefix(blocks, by_five, prefix_points, prefix_images)
            if perm is not None and perm not in found and any(
                perm[i] != i for i in range(12)
            ):
                found.append(perm)
        return found

    # M12 on 12 points
    while True:
        gens12 = random_automorphisms(want=2)
        g = enumerate_group(gens12)
        if g.order == 95040:
            m12 = (gens12, g)
            break

    # M11 as the stabilizer of point 11, restricted to 11 points
    while True:
        gens = random_automorphisms(fixed_point=11, want=2)
        gens11 = [p[:11] for p in gens]
        g = enumerate_group(gens11)
        if g.order == 7920:
            m11 = (gens11, g)
            break

    # 2.M12 from monomial lifts, on 24 points
    lifted = []
    for perm in m12[0]:
        lifts = monomial_lifts(words, gen_rows, perm)
        assert len(lifts) == 2, f"expected 2 monomial lifts, got {len(lifts)}"
        lifted.append(signed_to_perm24(*lifts[0]))
    g = enumerate_group(lifted)
    assert g.order == 190080, g.order
    m12x2 = (lifted, g)

    return {"m12": m12, "m11": m11, "2m12": m12x2}


if __name__ == "__main__":
    out = build_all()
    for name, (gens, group) in out.items():
        print(f"{name}: order {group.order}, {len(group.class_members)} classes, "
              f"sizes {sorted(group.class_sizes())}")
