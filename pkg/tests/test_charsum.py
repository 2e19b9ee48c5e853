"""Sum tables against the add-it-all-up oracle."""

import pytest

from rdickson import charsum as cs
from rdickson import gf
from rdickson.gf import InternalCheckError

F5 = gf.make_field(5)
F7 = gf.make_field(7)
F9 = gf.make_field(3, 2)


class TestPowerSum:
    @pytest.mark.parametrize("F", [F5, F9], ids=lambda F: f"GF({F.q})")
    def test_divisibility_shape(self, F):
        for m in range(0, 3 * (F.q - 1) + 2):
            want = F.neg(1) if m > 0 and m % (F.q - 1) == 0 else 0
            assert cs.power_sum(F, m) == want

    def test_rejects_negative_exponent(self):
        with pytest.raises(ValueError):
            cs.power_sum(F5, -1)


class TestBVector:
    def test_two_constructions_agree(self):
        for F in (F5, F7, F9):
            for k in range(F.p):
                assert cs._b_by_cases(F, k) == cs._b_by_product(F, k)

    def test_frozen_entries_q5_k3(self):
        # worked out from the digit formula by hand: pairs sit at the
        # digit-sum q-1 and q diagonals
        b = cs.b_coeffs(F5, 3)
        assert len(b) == 22
        assert (b[0], b[1]) == (1, 3)          # k-2 and 1-k mod 5
        assert (b[4], b[5]) == (1, 3)
        assert (b[20], b[21]) == (1, 3)
        assert [j for j, v in enumerate(b) if v] == \
            [0, 1, 4, 5, 8, 9, 12, 13, 16, 17, 20, 21]

    def test_rejects_char2(self):
        with pytest.raises(ValueError):
            cs.b_coeffs(gf.make_field(2, 2), 1)


class TestCVector:
    def test_structure(self):
        for F in (F5, F9):
            for k in range(F.p):
                c = cs.c_coeffs(F, k)
                assert len(c) == F.q ** 2 + F.q
                assert c[0] == 0


class TestSumTable:
    @pytest.mark.parametrize("F", [F5, F9], ids=lambda F: f"GF({F.q})")
    def test_matches_bruteforce_all_k(self, F):
        for k in range(F.p):
            table = cs.sums_via_recurrence(F, k)
            assert table.sums[0] == 0
            for n in range(1, F.q ** 2):
                assert table.sums[n] == cs.sums_bruteforce(F, k, n), (k, n)

    def test_frozen_q5_k3(self):
        # frozen from brute-force summation before the table existed
        table = cs.sums_via_recurrence(F5, 3)
        assert table.sums[1:9] == [0, 0, 0, 0, 0, 0, 0, 1]
        assert table.sums[24] == cs.sums_bruteforce(F5, 3, 24)

    def test_overdetermined_tail_guard_fires(self):
        c = cs.c_coeffs(F5, 3)
        c[F5.q ** 2] = (c[F5.q ** 2] + 1) % F5.p
        with pytest.raises(InternalCheckError):
            cs._d_vector(F5, 3, c)

    def test_json_rows(self):
        blob = cs.sums_via_recurrence(F9, 2).to_json()
        assert blob["field"] == "3^2/1,0,1" and blob["k"] == 2
        assert len(blob["rows"]) == 80
        assert blob["rows"][0]["n"] == 1
        first = blob["rows"][0]
        assert first["sum"] == list(F9.coeffs(cs.sums_bruteforce(F9, 2, 1)))

    def test_rejects_char2(self):
        with pytest.raises(ValueError):
            cs.sums_via_recurrence(gf.make_field(2), 1)


class TestResidueIdentity:
    def test_holds_from_bruteforce_sums(self):
        for F in (F5, F9):
            for k in (0, 2, F.p - 1):
                assert cs.residue_identity_holds(F, k)
