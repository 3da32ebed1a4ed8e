import pytest

from treespec.errors import Infeasible, TooLarge
from treespec.graph import degree_profile, tau, tau_brute
from treespec.regular import (PendantSpec, assemble_regular, attach_pendants, attachment_block,
                              build_base, build_deg23_family, build_deg24_family, circulant,
                              deficient_vertices, deg23_bases, deg24_bases,
                              enumerate_pendant_specs, pendant, predicted_tau, smallest_feasible_n)
from treespec.witness import format_word, vector_of


def _expected_profile(spec):
    k = spec.k
    n = k + 2 + spec.extra
    if spec.variant == "Hprime":
        return {k - 1: k - 4, k: n - (k - 4)}
    return {k - 1: k - 2, k: n - (k - 2)}


def test_pendant_k3():
    h = pendant(PendantSpec(3))
    assert h.n == 5 and h.is_simple()
    assert degree_profile(h) == {2: 1, 3: 4}
    assert tau(h) == tau_brute(h) == 24


def test_pendant_k5_variants():
    assert degree_profile(pendant(PendantSpec(5))) == {4: 3, 5: 4}
    assert degree_profile(pendant(PendantSpec(5, "Hprime"))) == {4: 1, 5: 6}


@pytest.mark.parametrize("spec", list(enumerate_pendant_specs()), ids=str)
def test_pendant_specs(spec):
    try:
        h = pendant(spec)
    except Infeasible:
        # H' only exists for k >= 5; H'' needs an even k * (k + 1 + extra)
        assert (spec.variant == "Hprime" and spec.k < 5) or (
            spec.variant == "Hdoubleprime" and (spec.k * (spec.k + 1 + spec.extra)) % 2)
        return
    assert h.is_simple() and h.is_connected()
    assert degree_profile(h) == _expected_profile(spec)
    assert h.n == spec.k + 2 + spec.extra


def test_pendant_validation():
    with pytest.raises(ValueError):
        pendant(PendantSpec(4, "H", 1))
    with pytest.raises(ValueError):
        pendant(PendantSpec(4, "bogus"))
    with pytest.raises(Infeasible):
        pendant(PendantSpec(2))


def test_circulant():
    for n, k in [(6, 3), (7, 4), (8, 5), (9, 6)]:
        g = circulant(n, k)
        assert degree_profile(g) == {k: n} and g.is_simple()
    with pytest.raises(Infeasible):
        circulant(7, 3)


def test_attachment_block_is_regular_closure():
    spec = PendantSpec(4)
    blk = attachment_block(spec)
    degs = blk.degrees()
    assert degs[-1] == len(deficient_vertices(pendant(spec), 4)) == 2
    assert all(d == 4 for d in degs[:-1])


def test_build_deg23_family_small():
    fam = build_deg23_family(4)
    assert len(fam) == 1
    word, w = fam[0]
    assert format_word(word) == "A C"
    assert degree_profile(w.graph) == {2: 4}
    assert vector_of(w) == (3, 1)


def test_deg23_bases_match_graphs():
    for word, w in build_deg23_family(10):
        assert set(degree_profile(w.graph)) <= {2, 3}
    for b in deg23_bases(10):
        w = build_base(3, b)
        assert vector_of(w) == b.vector
        assert w.n == b.m
        assert degree_profile(w.graph).get(2, 0) == b.deg2


def test_deg24_bases_match_graphs():
    for b in deg24_bases(12):
        w = build_base(4, b)
        assert vector_of(w) == b.vector
        assert w.n == b.m
        prof = degree_profile(w.graph)
        assert set(prof) <= {2, 4}
        assert prof.get(2, 0) == b.deg2
    assert len(build_deg24_family(8)) == len(list(deg24_bases(8)))


def test_family_budget_limit():
    with pytest.raises(TooLarge):
        build_deg23_family(23)


def test_attach_pendants_on_cycle():
    g = attach_pendants(3, build_base(3, next(deg23_bases(4))).graph)
    assert degree_profile(g) == {3: g.n}
    # four bridges to four K4-minus-subdivided-edge gadgets
    assert tau(g) == 4 * 24 ** 4


@pytest.mark.parametrize("k", [3, 4, 5])
def test_assemble_smallest(k):
    n = smallest_feasible_n(k)
    fam = assemble_regular(k, n)
    assert len(fam.members) >= 2
    assert len(set(fam.tau_values)) == len(fam.tau_values)
    for i, g in enumerate(fam.members):
        assert degree_profile(g) == {k: n}
        assert g.is_connected() and g.is_simple()
        assert predicted_tau(fam, i) == fam.tau_values[i]


def test_smallest_feasible_values():
    assert smallest_feasible_n(3) == 34
    assert smallest_feasible_n(4) == 51
    assert smallest_feasible_n(5) == 72


def test_smaller_n_is_infeasible_or_single():
    k = 3
    n = smallest_feasible_n(k)
    for m in range(n - 6, n, 2):
        try:
            fam = assemble_regular(k, m)
        except Infeasible:
            continue
        assert len(fam.members) < 2


def test_padding_with_extra_vertices():
    fam = assemble_regular(4, 53)
    assert fam.extra > 0
    for i, g in enumerate(fam.members):
        assert degree_profile(g) == {4: 53}
        assert predicted_tau(fam, i) == fam.tau_values[i]


def test_parity_infeasible():
    with pytest.raises(Infeasible):
        assemble_regular(3, 35)
    with pytest.raises(Infeasible):
        assemble_regular(5, 73)


def test_manifest_roundtrip():
    import json
    fam = assemble_regular(3, 34)
    obj = json.loads(fam.to_json())
    assert obj["k"] == 3 and obj["n"] == 34
    assert [int(m["tau"]) for m in obj["members"]] == fam.tau_values
