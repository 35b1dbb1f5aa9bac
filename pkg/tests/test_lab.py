import pytest

from cisupport import instances as inst
from cisupport import lab
from cisupport.ci import cyclic, free, residue_field
from cisupport.errors import NoWitness


@pytest.fixture(scope="module")
def ring_a():
    return inst.hypersurface_xy()


def _gate_discipline(rep):
    if rep.status in (lab.VERIFIED, lab.REFUTED):
        assert rep.hypothesis_met
    if not rep.hypothesis_met:
        assert rep.status == lab.SKIPPED and rep.failed_clause


def test_join_check_constructed_pair():
    X1, X2 = lab.constructed_pairs()[0]
    rep = lab.check_join_theorem(X1, X2)
    assert rep.status == lab.VERIFIED
    assert rep.details["support_tensor"] == rep.details["join"] == "P^1"
    assert rep.details["cx_tensor"] == 2


def test_join_check_hypersurface_pair(ring_a):
    rep = lab.check_join_theorem(cyclic(ring_a, ["x+y"]), cyclic(ring_a, ["x"]))
    assert rep.status == lab.VERIFIED
    assert rep.details["support_tensor"] == rep.details["join"] == "P^0"


def test_join_check_example_a_skipped():
    ex = inst.example_a()
    rep = lab.check_join_theorem(ex["M"], ex["N"])
    _gate_discipline(rep)
    assert rep.status == lab.SKIPPED and "FailsFinitely" in rep.failed_clause
    assert rep.details["support_tensor"] == "P^0" and rep.details["equal"] is False


def test_hom_check(ring_a):
    N = cyclic(ring_a, ["x"])
    rep = lab.check_hom_theorem(free(ring_a, 1), N)
    assert rep.status == lab.VERIFIED and rep.details["support_hom"] == "P^0"
    X1, X2 = lab.constructed_pairs()[0]
    rep = lab.check_hom_theorem(X1, X2)
    assert rep.status == lab.VERIFIED and rep.details["support_hom"] == "P^1"
    k = residue_field(ring_a)
    rep = lab.check_hom_theorem(k, k)
    _gate_discipline(rep)
    assert rep.failed_clause == "supports intersect"


def test_dim_criterion(ring_a):
    rep = lab.check_dim_criterion(cyclic(ring_a, ["x+y"]), cyclic(ring_a, ["x"]))
    assert rep.status == lab.VERIFIED and rep.details["nonzero_tor"] == []
    k = residue_field(ring_a)
    rep = lab.check_dim_criterion(k, k)
    _gate_discipline(rep)
    assert rep.failed_clause == "supports intersect"
    rep = lab.check_dim_criterion(*lab.constructed_pairs()[0])
    assert rep.status == lab.VERIFIED


def test_de_probe_hypersurface_pair(ring_a):
    rep = lab.conjecture_probes(cyclic(ring_a, ["x+y"]), cyclic(ring_a, ["x"]))
    de = rep.details["de"]
    assert de["gate"] == "met" and de["holds"]
    assert de["dim_M"] + de["dim_N"] == de["dim_R"] + de["dim_tensor"] == 1


def test_strong_di_gate_on_example_e():
    e = inst.example_e()
    rep = lab.conjecture_probes(e["M"], e["N"], probes=["strong_di"])
    assert rep.status == lab.SKIPPED
    assert rep.details["strong_di"]["gate"] == "supports intersect"


def test_para_probe_on_example_a_ring(ring_a):
    ex = inst.example_a()
    rep = lab.conjecture_probes(ex["M"], ex["N"], x="x-y")
    para = rep.details["para"]
    assert para["dim_N"] == para["dim_N_mod_x"] == 0
    assert para["gate"] == "x is not a parameter element on N"
    rep = lab.conjecture_probes(cyclic(ring_a, ["x"]), free(ring_a, 1), x="x-y")
    para = rep.details["para"]
    assert para["gate"] == "met" and para["holds"] and para["dim_R_mod_x"] == 0
    assert rep.status == lab.VERIFIED


def test_para_needs_witness(ring_a):
    with pytest.raises(NoWitness):
        lab.conjecture_probes(free(ring_a, 1), free(ring_a, 1), probes=["para"])


def test_experiments_example_e():
    e = inst.example_e()
    rep = lab.experiments(e["M"], e["N"], 6)
    d = rep.details
    assert d["tor_supports"][1:] == ["empty", "P^0", "empty", "P^0", "empty", "P^0"]
    assert d["unions"][-1] == "P^0" and d["union_stable_from"] <= 2
    assert not d["per_index_stabilizes"]


def test_experiments_independent_pair():
    X1, X2 = lab.constructed_pairs()[0]
    rep = lab.experiments(X1, X2, 3)
    assert rep.status == lab.VERIFIED
    assert rep.details["union_stable_from"] == 0 and rep.details["join_in_union"]


def test_betti_convolution_residue_field(ring_a):
    k = residue_field(ring_a)
    lhs, rhs = lab.betti_convolution(k, k, 6)
    assert lhs == [1, 4, 8, 12, 16, 20, 24]
    assert all(a <= b for a, b in zip(lhs, rhs))


def test_tensor_chain_reports_first_failure():
    R = inst.two_points()
    X = lab.constructed_pairs()[0]
    out = lab.tensor_chain([X[0], X[1], residue_field(R)])
    assert out["steps"][0] == "Independent" and out["first_failure"] == 2


def test_reports_are_deterministic():
    ex = inst.example_a()
    a = lab.check_join_theorem(ex["M"], ex["N"]).as_dict(timing=False)
    b = lab.check_join_theorem(ex["M"], ex["N"]).as_dict(timing=False)
    assert a == b and "ms" not in a


def test_invariance_suite_small():
    reps = lab.invariance_suite(42, 2, rings=[inst.hypersurface_xy(lab.DEFAULT_FIELD),
                                              inst.three_points(lab.DEFAULT_FIELD)])
    assert reps and all(r.ok for r in reps)
    for r in reps:
        _gate_discipline(r)


def test_invariance_free_module_syzygy(ring_a):
    rep = lab.check_syzygy_invariance(free(ring_a, 1))
    assert rep.status == lab.VERIFIED


def test_coordinate_permutation_on_example_d_ring():
    R = inst.three_points(lab.DEFAULT_FIELD)
    M = cyclic(R, ["b"])
    rep = lab.check_coordinate_change(M, [[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    assert rep.status == lab.VERIFIED


@pytest.mark.parametrize("label", list(lab.GOLDEN))
def test_golden_examples(label):
    rep = lab.GOLDEN[label]()
    assert rep.status == lab.VERIFIED, rep.details
