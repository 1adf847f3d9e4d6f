import itertools
import json
import math

import pytest

from forgottenmonoid.forgotten import (
    CanonicalForm,
    ClassKey,
    all_class_keys,
    canonical_of,
    canonical_of_key,
    canonical_word,
    class_closure,
    class_key,
    classes_count,
    coforgotten_equivalent,
    elementary_moves,
    equivalent,
    form_from_inversions,
    form_inversions,
    insert,
    inv_bounds,
    is_canonical,
    lambda_members,
    lex_enumerate,
    next_lambda_down,
    normalized_forms,
    parse_class_key,
    v_members,
)
from forgottenmonoid.perms import (
    ParseError,
    all_permutations,
    inverse,
    inversion_number,
    is_lambda_shaped,
    is_v_shaped,
    standardize,
)

PAPER_CLASS_N5 = {
    (1, 2, 5, 4, 3), (1, 3, 4, 5, 2), (1, 3, 5, 2, 4), (1, 4, 2, 5, 3),
    (1, 4, 3, 2, 5), (1, 5, 2, 3, 4), (2, 1, 4, 5, 3), (2, 1, 5, 3, 4),
    (2, 3, 1, 5, 4), (2, 3, 4, 1, 5), (2, 4, 1, 3, 5), (3, 1, 2, 5, 4),
    (3, 1, 4, 2, 5), (3, 2, 1, 4, 5), (4, 1, 2, 3, 5),
}


def digits(p):
    return "".join(map(str, p))


class TestElementaryMoves:
    def test_examples(self):
        assert elementary_moves((1, 2, 3)) == set()
        assert elementary_moves((1, 3, 2)) == {(2, 1, 3)}
        assert elementary_moves((2, 3, 1)) == {(3, 1, 2)}

    def test_moves_are_symmetric(self):
        for p in all_permutations(5):
            for q in elementary_moves(p):
                assert p in elementary_moves(q)

    def test_window_count_bound(self):
        for p in all_permutations(5):
            assert len(elementary_moves(p)) <= len(p) - 2


class TestClosure:
    def test_identity_is_alone(self):
        assert class_closure(tuple(range(1, 7))) == {tuple(range(1, 7))}

    def test_paper_class_at_n5(self):
        assert class_closure((1, 2, 5, 4, 3)) == PAPER_CLASS_N5

    def test_size_example(self):
        assert len(class_closure((2, 1, 4, 3))) == 5


class TestClassKey:
    def test_examples(self):
        assert class_key(tuple(range(1, 7))) == ClassKey(6, 0, True)
        assert class_key((1, 2, 5, 4, 3)) == ClassKey(5, 3, True)
        assert class_key((4, 1, 2, 3)) == ClassKey(4, 3, False)

    def test_requires_n_at_least_two(self):
        with pytest.raises(ValueError):
            class_key((1,))

    def test_bounds_enforced(self):
        ClassKey(5, 6, True)  # top of the 1-before-n range
        with pytest.raises(ValueError):
            ClassKey(5, 7, True)
        with pytest.raises(ValueError):
            ClassKey(5, 3, False)
        with pytest.raises(ValueError):
            ClassKey(1, 0, True)

    def test_text_and_json_round_trip(self):
        key = ClassKey(8, 10, False)
        assert str(key) == "8,10,n1"
        assert parse_class_key(str(key)) == key
        assert ClassKey.from_json_dict(json.loads(json.dumps(key.to_json_dict()))) == key
        with pytest.raises(ParseError):
            parse_class_key("8,10")
        with pytest.raises(ParseError):
            parse_class_key("8,10,yes")


class TestEquivalence:
    def test_examples(self):
        assert equivalent((1, 2, 5, 4, 3), (1, 2, 5, 4, 3))
        assert equivalent((2, 3, 4, 1), (4, 1, 2, 3))
        assert not equivalent((1, 4, 3, 2), (2, 3, 4, 1))

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValueError):
            equivalent((1, 2), (1, 2, 3))

    def test_agrees_with_closure_at_n5(self):
        # the key shortcut against the breadth-first oracle
        for p in all_permutations(5):
            closure = class_closure(p)
            for q in all_permutations(5):
                assert equivalent(p, q) == (q in closure)


class TestCanonicalForms:
    def test_identifications_applied(self):
        assert CanonicalForm("sigma", 2, 5, 5) == CanonicalForm("sigma", 1, 2, 5)
        assert CanonicalForm("tau", 3, 6, 6) == CanonicalForm("tau", 2, 3, 6)
        assert CanonicalForm("sigma", 0, 1, 5) == CanonicalForm("sigma", 1, 5, 5)

    def test_domain_enforced(self):
        with pytest.raises(ValueError):
            CanonicalForm("sigma", 3, 3, 6)  # needs a > k
        with pytest.raises(ValueError):
            CanonicalForm("sigma", 0, 2, 6)  # k = 0 only pairs with a = 1
        with pytest.raises(ValueError):
            CanonicalForm("tau", 2, 8, 6)  # a beyond n
        with pytest.raises(ValueError):
            CanonicalForm("delta", 1, 2, 4)

    def test_str(self):
        assert str(CanonicalForm("sigma", 1, 3, 6)) == "sigma(1,3;n=6)"

    def test_words(self):
        assert canonical_word(CanonicalForm("sigma", 1, 3, 6)) == (1, 3, 6, 5, 4, 2)
        assert canonical_word(CanonicalForm("sigma", 4, 5, 6)) == tuple(range(1, 7))
        assert canonical_word(CanonicalForm("tau", 1, 4, 5)) == (4, 5, 3, 2, 1)
        assert canonical_word(CanonicalForm("tau", 1, 5, 5)) == (5, 4, 3, 2, 1)

    def test_inversion_formulas_against_brute_force(self):
        for n in range(2, 10):
            for family in ("sigma", "tau"):
                for form in normalized_forms(n, family):
                    assert form_inversions(form) == inversion_number(canonical_word(form))

    def test_inversion_examples(self):
        assert form_inversions(CanonicalForm("sigma", 1, 3, 6)) == 7
        assert form_inversions(CanonicalForm("sigma", 4, 5, 6)) == 0
        assert form_inversions(CanonicalForm("tau", 1, 7, 7)) == 21

    def test_form_from_inversions_worked_example(self):
        assert canonical_word(form_from_inversions("sigma", 13, 7)) == (1, 5, 7, 6, 4, 3, 2)
        assert canonical_word(form_from_inversions("tau", 13, 7)) == (2, 4, 7, 6, 5, 3, 1)

    def test_round_trip(self):
        for n in range(2, 11):
            for family in ("sigma", "tau"):
                lo, hi = inv_bounds(n, family == "sigma")
                for inv in range(lo, hi + 1):
                    form = form_from_inversions(family, inv, n)
                    assert form_inversions(form) == inv
                for form in normalized_forms(n, family):
                    assert form_from_inversions(family, form_inversions(form), n) == form

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            form_from_inversions("sigma", 7, 5)
        with pytest.raises(ValueError):
            form_from_inversions("tau", 3, 5)


class TestCanonicalElements:
    def test_examples(self):
        assert canonical_of(tuple(range(1, 6))) == tuple(range(1, 6))
        assert canonical_of((3, 1, 4, 2)) == (1, 4, 3, 2)
        assert canonical_of((2, 4, 1, 3)) == (2, 3, 4, 1)

    def test_lex_minimum_of_closure(self):
        for n in range(2, 6):
            for p in all_permutations(n):
                assert canonical_of(p) == min(class_closure(p))

    def test_lex_lists(self):
        assert lex_enumerate(1) == [(1,)]
        assert lex_enumerate(2) == [(1, 2), (2, 1)]
        assert lex_enumerate(3) == [(1, 2, 3), (1, 3, 2), (2, 3, 1), (3, 2, 1)]
        assert [digits(w) for w in lex_enumerate(4)] == [
            "1234", "1243", "1342", "1432", "2341", "2431", "3421", "4321",
        ]

    def test_counts(self):
        for n in range(2, 13):
            assert len(lex_enumerate(n)) == classes_count(n) == n * n - 3 * n + 4

    def test_is_canonical_examples(self):
        assert is_canonical(tuple(range(1, 8)))
        assert is_canonical((1, 2, 4, 5, 3))
        assert not is_canonical((1, 3, 4, 5, 2))

    def test_is_canonical_matches_enumeration(self):
        for n in range(2, 7):
            members = set(lex_enumerate(n))
            for p in all_permutations(n):
                assert is_canonical(p) == (p in members)


class TestInsertion:
    TABLE = ["2476531", "1476532", "1376542", "1276543", "1267543", "1257643", "1247653"]

    def test_table(self):
        w = (1, 3, 6, 5, 4, 2)
        assert [digits(insert(w, i)) for i in range(7)] == self.TABLE

    def test_standardization_consistency(self):
        for n in range(2, 7):
            for w in lex_enumerate(n - 1):
                for i in range(n):
                    result = insert(w, i)
                    assert is_canonical(result)
                    assert inversion_number(result) == inversion_number(w) + n - 1 - i
                    assert equivalent(result, standardize(w + (i,)))

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            insert((1, 3, 4, 5, 2), 0)  # not canonical
        with pytest.raises(ValueError):
            insert((1, 3, 6, 5, 4, 2), 7)  # letter out of range
        with pytest.raises(ValueError):
            insert((1, 3, 6, 5, 4, 2), -1)

    def test_size_one_base(self):
        assert insert((1,), 0) == (2, 1)
        assert insert((1,), 1) == (1, 2)


class TestShapeMembers:
    def test_lambda_examples(self):
        assert lambda_members(ClassKey(6, 0, True)) == {tuple(range(1, 7))}
        assert {digits(w) for w in lambda_members(ClassKey(8, 10, True))} == {
            "12387654", "12478653", "12568743", "13468752", "13567842",
        }
        assert {digits(w) for w in lambda_members(ClassKey(8, 10, False))} == {
            "23458761", "23467851",
        }

    def test_against_full_scan(self):
        for n in range(2, 7):
            for key in all_class_keys(n):
                scan_l = {p for p in all_permutations(n) if is_lambda_shaped(p) and class_key(p) == key}
                scan_v = {p for p in all_permutations(n) if is_v_shaped(p) and class_key(p) == key}
                assert lambda_members(key) == scan_l
                assert v_members(key) == scan_v

    def test_every_class_has_both_shapes(self):
        for n in range(2, 8):
            for key in all_class_keys(n):
                assert lambda_members(key)
                assert v_members(key)


class TestLambdaWalk:
    def test_documented_chain(self):
        chain = ["13567842", "13468752", "12568743", "12478653", "12387654"]
        perms = [tuple(int(c) for c in w) for w in chain]
        for before, after in zip(perms, perms[1:]):
            assert next_lambda_down(before) == after
        assert next_lambda_down(perms[-1]) is None

    def test_all_have_ten_inversions(self):
        chain = ["13567842", "13468752", "12568743", "12478653", "12387654"]
        for w in chain:
            assert inversion_number(tuple(int(c) for c in w)) == 10

    def test_rejects_non_lambda(self):
        with pytest.raises(ValueError):
            next_lambda_down((3, 1, 4, 2))

    def test_walk_reaches_canonical(self):
        for n in range(2, 8):
            for key in all_class_keys(n):
                for start in lambda_members(key):
                    current = start
                    while (step := next_lambda_down(current)) is not None:
                        assert is_lambda_shaped(step)
                        assert class_key(step) == key
                        assert step < current
                        current = step
                    assert current == canonical_of_key(key)


class TestCoforgotten:
    def test_examples(self):
        assert coforgotten_equivalent((2, 3, 4, 1), (2, 3, 4, 1))
        # inverses are 4123 and 2341, which share the key (4, 3, n-before-1)
        assert inverse((2, 3, 4, 1)) == (4, 1, 2, 3)
        assert coforgotten_equivalent((2, 3, 4, 1), (4, 1, 2, 3))

    def test_counts(self):
        assert classes_count(4) == 8
        assert classes_count(7) == 32
        with pytest.raises(ValueError):
            classes_count(1)


class TestKeyListing:
    def test_ordering_matches_tables(self):
        keys = all_class_keys(4)
        assert [str(k) for k in keys] == [
            "4,0,1n", "4,1,1n", "4,2,1n", "4,3,1n", "4,3,n1", "4,4,n1", "4,5,n1", "4,6,n1",
        ]

    def test_counts_and_sizes(self):
        for n in range(2, 9):
            keys = all_class_keys(n)
            assert len(keys) == classes_count(n)
            assert len(set(keys)) == len(keys)

    def test_class_sizes_sum_to_factorial(self):
        for n in range(2, 7):
            total = sum(len(class_closure(canonical_of_key(key))) for key in all_class_keys(n))
            assert total == math.factorial(n)
