import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from comeralg.comer_checkers import (
    CongruenceError,
    Variant,
    candidate_primes,
    check,
    required_masks,
    search_smallest,
)
from comeralg.coset_cycles import build_coset_system, find_witness
from comeralg.field_core import build_context, is_prime

RAMSEY = Variant.DIRECTED_RAMSEY
ANTI = Variant.DIRECTED_ANTI_RAMSEY
SYM = Variant.SYMMETRIC_RAMSEY


def test_variant_parameters():
    assert RAMSEY.cosets_for(10) == 20
    assert ANTI.cosets_for(2) == 4
    assert SYM.cosets_for(31) == 31
    assert RAMSEY.congruence(2) == (5, 8)
    assert SYM.congruence(2) == (1, 4)
    assert RAMSEY.default_bound(2) == 261
    assert ANTI.default_bound(1) == 21
    assert ANTI.default_bound(8) == 65541
    assert SYM.default_bound(3) == 86


def test_candidate_primes_examples():
    assert list(candidate_primes(2, ANTI, 60)) == [5, 13, 29, 37, 53]
    assert list(candidate_primes(1, RAMSEY, 21)) == [3, 7, 11, 19]
    assert list(candidate_primes(2, SYM, 20)) == [5, 13, 17]


def test_candidate_primes_rejects_bad_m():
    with pytest.raises(ValueError):
        list(candidate_primes(0, ANTI, 100))


@settings(max_examples=30, deadline=None)
@given(
    st.integers(min_value=1, max_value=12),
    st.sampled_from(list(Variant)),
    st.integers(min_value=3, max_value=5000),
)
def test_candidate_primes_congruence(m, v, p_max):
    r, mod = v.congruence(m)
    got = list(candidate_primes(m, v, p_max))
    assert got == sorted(got)
    for q in got:
        assert is_prime(q)
        assert q % mod == r % mod
        assert q <= p_max


def test_required_masks_shapes():
    # n=4 directed: full=0b1111
    assert required_masks(RAMSEY, 4) == [0b1110, 0b1111, 0b1010, 0b1111]
    assert required_masks(ANTI, 4) == [0b1011, 0b1111, 0b1111, 0b1111]
    assert required_masks(SYM, 3) == [0b110, 0b111, 0b111]
    # m=1 directed: the union over other classes degenerates to empty
    assert required_masks(RAMSEY, 2) == [0b10, 0b00]


def test_check_known_passes():
    assert check(29, 2, ANTI).passed
    assert check(3, 1, RAMSEY).passed
    assert check(33791, 31, SYM).passed
    assert check(3221, 10, RAMSEY).passed
    assert check(67, 3, ANTI).passed


def test_check_known_failures():
    r = check(13, 2, ANTI)
    assert not r.passed
    assert r.violation.condition == "C1"
    assert r.violation.shift == 0
    assert r.violation.missing == (0, 3)
    assert r.violation.extra == (2,)
    r = check(7, 1, RAMSEY)
    assert not r.passed
    assert r.violation.condition == "C1"
    assert 0 in r.violation.extra


def test_check_report_fields():
    r = check(29, 2, ANTI)
    assert (r.p, r.m, r.n, r.k, r.g) == (29, 2, 4, 7, 2)
    assert r.violation is None


def test_check_rejects_wrong_congruence():
    with pytest.raises(CongruenceError):
        check(15, 2, ANTI)  # composite
    with pytest.raises(CongruenceError):
        check(31, 2, ANTI)  # 31 = 7 (mod 8)
    with pytest.raises(CongruenceError):
        check(17, 2, RAMSEY)  # k even


def test_check_paranoid_mode():
    assert check(29, 2, ANTI, paranoid=True).passed
    assert not check(13, 2, ANTI, paranoid=True).passed


def test_search_smallest_known_values():
    assert search_smallest(2, ANTI) == 29
    assert search_smallest(1, RAMSEY) == 3
    assert search_smallest(3, ANTI) == 67


def test_search_smallest_conclusive_negatives():
    assert search_smallest(2, RAMSEY) is None
    assert search_smallest(1, ANTI) is None


def test_search_smallest_replay():
    p = search_smallest(2, ANTI)
    assert p == 29
    assert check(p, 2, ANTI).passed
    for q in candidate_primes(2, ANTI, p - 1):
        assert not check(q, 2, ANTI).passed


def test_search_smallest_jobs_deterministic():
    for jobs in (1, 2, 4, 8):
        assert search_smallest(2, ANTI, jobs=jobs) == 29
        assert search_smallest(10, RAMSEY, jobs=jobs) == 3221
        assert search_smallest(2, RAMSEY, jobs=jobs) is None


def test_search_bound_cap():
    # first candidate already above the 32-bit table limit
    with pytest.raises(ValueError, match="2\\^31"):
        search_smallest(2**30, RAMSEY)


def test_search_respects_explicit_bound():
    assert search_smallest(2, ANTI, p_max=13) is None
    assert search_smallest(2, ANTI, p_max=29) == 29


def test_pass_implies_witness_freeness():
    cs = build_coset_system(build_context(3221), 20, require="odd-k")
    assert find_witness(cs, "sum") is None  # directed Ramsey pass
    cs29 = build_coset_system(build_context(29), 4, require="odd-k")
    assert find_witness(cs29, "antisum") is None  # anti pass


def test_symmetric_small_search():
    # m=2: p=5 gives X_0={1,4}, 1+4=0 and 1+1=2 in X_1 etc.
    got = search_smallest(2, SYM)
    assert got is not None
    assert check(got, 2, SYM).passed
    for q in candidate_primes(2, SYM, got - 1):
        assert not check(q, 2, SYM).passed
