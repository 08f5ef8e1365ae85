"""Verification corpus behavior: individual verifiers, suite wiring,
reports."""

import json

import pytest

import qheis
from qheis import (brute_force_reduce, catalog, normalize, run_suite,
                   suite_ok, verify_power_identities)
from qheis.coeffs import Coefficient, qnumber
from qheis.errors import OracleDivergence, ParamError
from qheis.ncpoly import NCPoly
from qheis.verify import (ideal_membership, render_table,
                          reports_to_json, verify_relation_set_equivalence)

C = Coefficient


class TestBruteForce:
    def test_single_rule(self):
        cls = catalog("classical", indices=1)
        got = brute_force_reduce(cls.parse("p_1*x_1"), cls.system())
        assert got == cls.parse("x_1*p_1 - i*hbar")

    def test_against_hand_expansion(self, families):
        g = families["gaddis"]
        got = brute_force_reduce(g.parse("y*x*x"), g.system())
        assert got == g.parse("q^2*x^2*y + hbar*(q + p^-1)*x*z")
        assert got == normalize(g.parse("y*x*x"), g.system())

    def test_random_sweep_matches_normalize(self, rng, families):
        w = families["wess"]
        sysm = w.system()
        cache = {}
        gens = list(w.generators)
        for _ in range(30):
            a = NCPoly.from_word([rng.choice(gens) for _ in range(5)])
            assert brute_force_reduce(a, sysm, cache=cache) == normalize(a, sysm)

    def test_divergence_detected(self):
        pres = catalog("gaddis", variant="printed")
        with pytest.raises(OracleDivergence):
            brute_force_reduce(pres.parse("y*z*x"), pres.system())


class TestPowerIdentities:
    def test_base_case_is_defining_relation(self, families):
        g = families["gaddis"]
        lhs = normalize(g.parse("y*x"), g.system())
        assert lhs == g.parse("q*x*y + hbar*z")

    def test_k2_coefficient(self):
        assert qnumber(2) == qheis.parse_expr("q + p^-1").coefficient(())

    def test_k5_matches_oracle(self, families):
        g = families["gaddis"]
        lhs = brute_force_reduce(g.parse("y*x*x*x*x*x"), g.system())
        rhs = (g.parse("x")**5 * g.parse("y") * C.q_power(5)
               + g.parse("x")**4 * g.parse("z") * (C.hbar_power(1) * qnumber(5)))
        assert lhs == rhs

    def test_suite_runner(self):
        report = verify_power_identities(K=10)
        assert report.status == "pass"


class TestEquivalence:
    def test_membership_by_conjugation(self, families):
        # the inverse-commutation relation is certified through u * rel * u
        s_def = catalog("schmudgen", variant="definition")
        rel = dict(catalog("schmudgen").relations)["u_inv_p"]
        ok, method = ideal_membership(rel, s_def)
        assert ok and "conjugate" in method

    def test_membership_by_scalar_combination(self, families):
        s_def = catalog("schmudgen", variant="definition")
        rel = dict(catalog("schmudgen").relations)["p_x"]
        ok, method = ideal_membership(rel, s_def)
        assert ok and "combination" in method

    def test_non_member_rejected(self, families):
        g = families["gaddis"]
        bogus = g.parse("y*x - x*y")
        ok, _ = ideal_membership(bogus, g)
        assert not ok

    def test_schmudgen_variants_equivalent(self):
        report = verify_relation_set_equivalence(
            "t-schm", catalog("schmudgen", variant="definition"),
            catalog("schmudgen"))
        assert report.status == "pass"

    def test_inequivalent_sets_fail(self, families):
        w = families["wess"]
        trimmed = qheis.Presentation(
            "wess-missing", w.generators,
            [(lab, rel) for lab, rel in w.relations if lab != "x_p"],
            inverse_pairs=w.inverse_pairs)
        report = verify_relation_set_equivalence("t-bad", w, trimmed)
        assert report.status == "fail"


@pytest.fixture(scope="module")
def reports():
    return run_suite("all", k=10)


class TestSuite:
    def test_everything_behaves_as_expected(self, reports):
        assert suite_ok(reports)

    def test_worked_rows_pass_exactly_as_reported(self, reports):
        by_id = {r.case_id: r for r in reports}
        for case in ("wess-from-unified", "schmudgen-from-unified-n1",
                     "schmudgen-from-unified-n-1", "wess-schwenk-from-unified",
                     "qhbar-from-unified", "qhbar-quantization-from-unified",
                     "classical-from-unified"):
            assert by_id[case].status == "pass", case

    def test_table_rows_pass_or_annotated(self, reports):
        table = [r for r in reports if r.case_id.startswith("table-")]
        assert len(table) == 14
        for r in table:
            assert r.status in ("pass", "annotated", "discrepancy")
            if r.status != "pass":
                # a non-pass row always carries its diagnosis
                assert r.annotations or r.detail

    def test_discrepancies_documented_not_hidden(self, reports):
        by_id = {r.case_id: r for r in reports}
        for case in ("schmudgen-printed-px", "schmudgen-printed-xp",
                     "wess-ore-delta-doubled-hbar", "gaddis-printed-zx"):
            assert by_id[case].status == "discrepancy"
            assert by_id[case].witness or by_id[case].detail

    def test_family_selection(self):
        reports = run_suite("gaddis", k=5)
        assert all("gaddis" in r.case_id for r in reports)
        assert any(r.claim == "power_identity" for r in reports)

    def test_empty_selection_errors(self):
        with pytest.raises(ParamError):
            run_suite("no-such-family")

    def test_byte_determinism(self, reports):
        again = run_suite("all", k=10)
        assert reports_to_json(reports) == reports_to_json(again)

    def test_render_table_lists_every_case(self, reports):
        table = render_table(reports)
        for r in reports:
            assert r.case_id in table

    def test_json_report_matches_schema(self, reports):
        import jsonschema
        from importlib import resources

        schema = json.loads(
            resources.files("qheis").joinpath("data/report_schema.json")
            .read_text())
        payload = json.loads(reports_to_json(reports))
        jsonschema.validate(payload, schema)

    def test_unit_reported_for_specializations(self, reports):
        by_id = {r.case_id: r for r in reports}
        assert by_id["qhbar-from-unified"].unit is not None
