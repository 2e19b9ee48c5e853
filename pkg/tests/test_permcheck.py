"""Permutation criteria against each other and against plain counting."""

import math

import pytest

from rdickson import gf, permcheck as pc
from rdickson import rdpoly as rd

F3 = gf.make_field(3)
F5 = gf.make_field(5)
F7 = gf.make_field(7)
F9 = gf.make_field(3, 2)


def is_permutation(F, fn):
    # independent oracle: compare sorted image with sorted domain
    return sorted(fn(x) for x in F.elements()) == sorted(F.elements())


class TestBruteForce:
    def test_agrees_with_counting_oracle(self):
        maps = [lambda x: x,
                lambda x: F7.add(F7.mul(3, x), 2),
                lambda x: F7.mul(x, x),
                lambda x: F7.pow(x, 5),
                lambda x: 0]
        for fn in maps:
            assert pc.is_pp_bruteforce(F7, fn).verdict == is_permutation(F7, fn)

    def test_witness_is_first_collision(self):
        rep = pc.is_pp_bruteforce(F5, lambda x: F5.mul(x, x))
        assert not rep.verdict
        # 2^2 = 3^2 = 4 is the first collision in enumeration order
        assert rep.witness == ((2,), (3,))

    def test_pp_has_no_witness(self):
        rep = pc.is_pp_bruteforce(F5, lambda x: F5.add(x, 1))
        assert rep.verdict and rep.witness is None
        assert rep.criterion == "brute_force"


class TestMonomial:
    def test_matches_brute_force(self):
        for F in (F5, F9):
            for n in range(1, 25):
                want = is_permutation(F, lambda x: F.pow(x, n))
                rep = pc.monomial_pp(F, n)
                assert rep.verdict == want
                assert rep.detail["gcd"] == math.gcd(n, F.q - 1)

    def test_rejects_degree_zero(self):
        with pytest.raises(ValueError):
            pc.monomial_pp(F5, 0)


class TestTwoToOne:
    # frozen from an exhaustive image count done beforehand
    def test_gf9_n3_k1_is_pp(self):
        assert pc.dickson_pp_bruteforce(F9, 3, 1).verdict
        assert pc.is_pp_two_to_one(F9, 3, 1).verdict

    def test_agrees_with_brute_force_everywhere(self):
        for F in (F3, F5, F9):
            for n in range(1, F.q ** 2):
                for k in range(F.p):
                    assert pc.is_pp_two_to_one(F, n, k).verdict == \
                        pc.dickson_pp_bruteforce(F, n, k).verdict, (F.q, n, k)

    def test_fibers_are_exact_pairs_when_pp(self):
        rep = pc.is_pp_two_to_one(F9, 3, 1)
        fibers = rep.detail["fibers"]
        assert sum(len(v) for v in fibers.values()) == 2 * F9.q - 2
        assert all(len(v) == 2 for v in fibers.values())
        assert rep.detail["excluded_value"] not in fibers

    def test_failure_carries_extension_witness(self):
        bad = None
        for n in range(1, 25):
            rep = pc.is_pp_two_to_one(F5, n, 0)
            if not rep.verdict:
                bad = rep
                break
        assert bad is not None
        assert len(bad.witness[0]) == 2    # quadratic extension coordinates
        y = gf.quadratic_extension(F5).base.q * bad.witness[0][1] + bad.witness[0][0]
        val = rd.functional_map(gf.quadratic_extension(F5), bad.params.n, 0, y)
        hit_excluded = val == bad.detail["excluded_value"]
        assert hit_excluded or len(bad.detail["fibers"][val]) != 2

    def test_rejections(self):
        with pytest.raises(ValueError):
            pc.is_pp_two_to_one(gf.make_field(2, 2), 3, 1)
        with pytest.raises(ValueError):
            pc.is_pp_two_to_one(F5, 0, 1)

    def test_report_json_shape(self):
        blob = pc.is_pp_two_to_one(F9, 3, 1).to_json()
        assert blob == {"verdict": True, "criterion": "two_to_one",
                        "field": "3^2/1,0,1", "witness": None,
                        "params": {"n": 3, "k": 1, "a": 1}}


class TestTheoremGrids:
    def test_unknown_id(self):
        with pytest.raises(ValueError):
            pc.verify_theorem("T9.9", [5], [1])

    def test_size_guard(self):
        with pytest.raises(ValueError):
            pc.verify_theorem("T2.1", [7], [4])

    def test_a0_statement(self):
        rep = pc.verify_theorem("T2.2", [5], [1], ns=range(25))
        assert rep.passed and len(rep.entries) == 25 * 5
        # spot-check one entry against a direct count
        ent = next(e for e in rep.entries if e["n"] == 4 and e["k"] == 1)
        want = is_permutation(F5, lambda x: rd.eval_a0(F5, 4, 1, x))
        assert ent["lhs"] == want == ent["rhs"] and ent["ok"]

    def test_prime_power_statement_p3_vs_p5(self):
        assert pc.verify_theorem("T2.1", [3], [1, 2]).passed
        rep = pc.verify_theorem("T2.1", [5], [1], ls=[1])
        assert rep.passed
        assert all(e["rhs"] is False for e in rep.entries)   # p > 3: never

    def test_pl1_statements(self):
        assert pc.verify_theorem("T-pl1-k2", [3, 5], [1, 2], ls=[0, 1, 2]).passed
        rep = pc.verify_theorem("T-pl1-gen", [5], [1], ls=[0, 1])
        assert rep.passed
        assert all(e["k"] != 2 for e in rep.entries)

    def test_pl2_statements(self):
        rep = pc.verify_theorem("T-pl2-k2", [5], [1, 2], ls=[0, 1])
        assert rep.passed
        assert all("binomial_pp" in e for e in rep.entries)
        rep = pc.verify_theorem("T-pl2-k4", [5, 7], [1], ls=[0, 1])
        assert rep.passed
        assert all("l_zero_claim_ok" in e for e in rep.entries)
        assert pc.verify_theorem("T-pl2-k4", [3], [1]).entries == []
        rep = pc.verify_theorem("T-pl2-gen", [7], [1], ls=[0, 1])
        assert rep.passed
        assert all(e["k"] not in (0, 2, 4) for e in rep.entries)

    def test_k0_order_plus_two(self):
        rep = pc.verify_theorem("T-k0-pe2", [3, 5, 7], [1, 2])
        assert rep.passed
        by_q = {e["q"]: e["rhs"] for e in rep.entries}
        assert by_q == {3: False, 9: False, 5: False, 25: True,
                        7: True, 49: True}

    def test_report_json(self):
        rep = pc.verify_theorem("T2.1", [3], [1])
        blob = rep.to_json()
        assert blob["pass"] is True and blob["failures"] == []
        assert {"field", "q", "l", "n", "k", "lhs", "rhs", "ok"} <= \
            set(blob["grid"][0])
