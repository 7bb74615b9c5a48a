"""Tests for the named digraph families."""

import dataclasses

import pytest

from goodpairs.analysis import is_strong, is_tournament
from goodpairs.families import (
    FAMILIES,
    FamilySpec,
    InvalidParameters,
    generate,
    sanity,
    strong_semicomplete,
    w_prime,
)


class TestFamilySpec:
    """Tests for parsing "Name:key=value" specs."""

    def test_name_only(self):
        assert FamilySpec.parse("W") == FamilySpec("W")

    def test_parameters_become_integers(self):
        spec = FamilySpec.parse("WPrimeN:n=10")

        assert spec.params == (("n", 10),)
        assert str(spec) == "WPrimeN:n=10"

    def test_string_parameters(self):
        spec = FamilySpec.parse("NoBranchU:base=W, s=c2")

        assert dict(spec.params) == {"base": "W", "s": "c2"}

    def test_missing_value(self):
        with pytest.raises(InvalidParameters, match="key=value"):
            FamilySpec.parse("WPrimeN:n")


class TestGenerate:
    """Tests for building family members."""

    def test_w(self):
        d = generate("W")

        assert (d.n, d.arc_count) == (8, 18)
        assert d.label(d.vertex("c1")) == "c1"

    def test_h4(self):
        d = generate("H4")

        assert (d.n, d.arc_count) == (10, 20)

    def test_w_prime(self):
        d = generate("WPrimeN:n=10")

        assert d.n == 10
        assert d.arc_count == 18 + 2 + 2 + 2
        assert d.has_arc(d.vertex("c1"), d.vertex("s0"))
        assert d.has_arc(d.vertex("s1"), d.vertex("c2"))

    def test_badmulti_is_a_multidigraph(self):
        d = generate("BadMulti")

        assert d.is_multi
        assert d.multiplicity(d.vertex("s"), d.vertex("a")) == 2

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
    def test_strong_semicomplete(self, m):
        d = strong_semicomplete(m)

        assert d.n == m
        assert is_strong(d)

    def test_odd_rotational_tournament(self):
        assert is_tournament(strong_semicomplete(5))

    @pytest.mark.parametrize("name", sorted(FAMILIES))
    def test_every_family_builds_with_defaults(self, name):
        d = generate(name)

        assert d.n >= 4
        assert d.labels is not None


class TestInvalidParameters:
    """Tests for rejected family specs."""

    def test_unknown_family(self):
        with pytest.raises(InvalidParameters, match="unknown family 'Petersen'"):
            generate("Petersen")

    def test_unknown_parameter(self):
        with pytest.raises(InvalidParameters, match="takes no parameter 'x'"):
            generate("W:x=1")

    def test_non_integer(self):
        with pytest.raises(InvalidParameters, match="must be an integer"):
            generate("WPrimeN:n=ten")

    def test_w_prime_too_small(self):
        with pytest.raises(InvalidParameters, match="n >= 9"):
            w_prime(8)

    def test_four_exception_variant(self):
        with pytest.raises(InvalidParameters, match="variant"):
            generate("FourException:variant=ab")

    def test_empty_semicomplete(self):
        with pytest.raises(InvalidParameters):
            strong_semicomplete(0)


class TestSanity:
    """Tests for comparing declared and measured parameters."""

    @pytest.mark.parametrize("name", ["W", "H4", "E4", "ST4", "BadMulti", "K24Doubled"])
    def test_declared_values_hold(self, name):
        report = sanity(name)

        assert report.ok
        assert report.checks

    def test_lines(self):
        lines = sanity("W").to_lines()

        assert lines[0] == "STAT family=W n=8 arcs=18"
        assert "STAT family=W lambda=2 declared=2 ok=true" in lines

    def test_disagreement(self, monkeypatch):
        monkeypatch.setitem(FAMILIES, "W", dataclasses.replace(FAMILIES["W"], declared={"alpha": 3}))

        report = sanity("W")

        assert not report.ok
        assert report.to_lines()[-1] == "STAT family=W alpha=2 declared=3 ok=false"
