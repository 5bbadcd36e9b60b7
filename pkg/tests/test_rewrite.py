import json

import pytest

from braidwidth import BraidError, BraidWord, braid_equal, components, delete_even, positive_genus, stats
from braidwidth.rewrite import (
    block_decompose,
    t2_subsurface_word,
    t4_base_identity,
    t4_even_link_word,
    t4_low_even_word,
    t6_even_link_word,
    t6_low_even_word,
    t6_prefix_exponents,
    verify_certificate,
)
from braidwidth.word import parse_word, render, torus_word

CUBE_RHS = "s1 s3 s1 s2 s3 s4 s5 s1 s3 s2 s3 s3 s4 s3 s5"


class TestSixStrands:
    def test_base(self):
        c = t6_low_even_word(0)
        assert c.output_word == torus_word(6, 1)
        assert (c.odd_count, c.even_count) == (3, 2)

    def test_cube_identity(self):
        c = t6_low_even_word(1)
        assert (c.odd_count, c.even_count) == (11, 4)
        assert braid_equal(c.output_word, parse_word(CUBE_RHS, 6))

    def test_n2(self):
        c = t6_low_even_word(2)
        assert (c.odd_count, c.even_count) == (19, 6)
        assert braid_equal(c.output_word, torus_word(6, 5))

    @pytest.mark.parametrize("n", range(11))
    def test_counts(self, n):
        c = t6_low_even_word(n)
        assert c.verified
        assert (c.odd_count, c.even_count) == (8 * n + 3, 2 * n + 2)
        assert len(c.output_word) == 10 * n + 5
        assert c.output_word.is_positive()
        s = stats(c.output_word)
        assert (s.odd_letters, s.even_letters) == (c.odd_count, c.even_count)

    @pytest.mark.parametrize("n", range(11))
    def test_prefix_exponents(self, n):
        k1, k3, k5 = t6_prefix_exponents(n)
        assert k1 + k3 + k5 == 2 * n

    def test_rejects_negative(self):
        with pytest.raises(BraidError):
            t6_low_even_word(-1)

    def test_even_link_base(self):
        c = t6_even_link_word(1)
        assert c.output_word == torus_word(6, 2)
        assert c.even_count == 4

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_even_link(self, n):
        c = t6_even_link_word(n)
        assert c.verified and c.even_count == 2 * n + 2
        assert braid_equal(c.output_word, torus_word(6, 2 * n))

    def test_even_link_rejects_zero(self):
        with pytest.raises(BraidError):
            t6_even_link_word(0)


class TestFourStrands:
    def test_base(self):
        c = t4_low_even_word(0)
        assert c.output_word == torus_word(4, 1)
        assert (c.odd_count, c.even_count) == (2, 1)

    def test_base_identity(self):
        head, tail = t4_base_identity()
        word = BraidWord(4, head + (1, 2, 3) + tail)
        assert braid_equal(word, torus_word(4, 3))
        assert all(x % 2 for x in head)

    def test_n1(self):
        c = t4_low_even_word(1)
        assert len(c.output_word) == 9
        assert (c.odd_count, c.even_count) == (7, 2)

    def test_n3(self):
        c = t4_low_even_word(3)
        assert (c.odd_count, c.even_count) == (17, 4)
        assert braid_equal(c.output_word, torus_word(4, 7))

    @pytest.mark.parametrize("n", range(11))
    def test_counts(self, n):
        c = t4_low_even_word(n)
        assert c.verified
        assert (c.odd_count, c.even_count) == (5 * n + 2, n + 1)

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_even_link(self, n):
        c = t4_even_link_word(n)
        assert c.verified and c.even_count == n + 1
        assert braid_equal(c.output_word, torus_word(4, 2 * n))


class TestCertificates:
    def test_schema(self):
        data = t6_low_even_word(2).to_json()
        assert set(data) == {"strands", "input", "output", "odd", "even",
                             "normal_form", "verified", "construction"}
        assert data["construction"] == "t6"
        assert data["verified"] is True

    def test_roundtrip(self):
        for cert in (t6_low_even_word(3), t4_low_even_word(2), t6_even_link_word(2)):
            data = json.loads(cert.dumps())
            assert verify_certificate(data)["verified"]

    def test_tampered(self):
        data = t6_low_even_word(1).to_json()
        data["even"] = 3
        assert not verify_certificate(data)["verified"]
        data = t6_low_even_word(1).to_json()
        data["output"] = render(torus_word(6, 2))
        result = verify_certificate(data)
        assert not result["verified"] and not result["checks"]["braid_equal"]


class TestDeleteEven:
    def test_simple(self):
        assert delete_even(BraidWord(4, (1, 2, 3))).letters == (1, 3)
        assert delete_even(BraidWord(6, (1, 3, 5))).letters == (1, 3, 5)
        assert delete_even(BraidWord(4, (-2, -3))).letters == (-3,)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_idempotent_and_shorter(self, n):
        x = t6_low_even_word(n).output_word
        once = delete_even(x)
        assert delete_even(once) == once
        assert len(once) <= len(x)
        assert once.strands == x.strands

    @pytest.mark.parametrize("n", range(2, 8))
    def test_subsurface_word(self, n):
        alpha = t2_subsurface_word(n)
        head, odd = alpha.letters[:10], alpha.letters[10:]
        assert head == (1, 2, 3, 4, 5) * 2
        assert all(x % 2 for x in odd) and len(odd) == 8 * n - 5
        assert list(odd) == sorted(odd)
        assert components(alpha) == 1
        assert positive_genus(alpha) == 4 * n

    def test_subsurface_rejects_small(self):
        with pytest.raises(BraidError):
            t2_subsurface_word(1)


class TestBlocks:
    def test_arithmetic(self):
        d = block_decompose(BraidWord(3, (1, 2, 1, 2, 1, 2, 1)))
        assert len(d.blocks) == 1 and len(d.remainder) == 3
        assert d.block_size == 4

    def test_torus_6_13(self):
        d = block_decompose(torus_word(6, 13))
        assert len(d.blocks) == 4 and len(d.remainder) == 1
        assert d.square_count == 4 and d.unknown == 0

    def test_torus_6_13_by_search(self):
        d = block_decompose(torus_word(6, 13), search_cap=200_000)
        assert d.square_count + d.unknown == 4

    def test_empty(self):
        d = block_decompose(BraidWord(3, ()))
        assert d.blocks == () and len(d.remainder) == 0 and d.square_count == 0

    def test_search_cap_counts_unknown(self):
        d = block_decompose(torus_word(6, 13), search_cap=2)
        assert d.unknown + d.square_count == 4
        assert d.unknown > 0

    @pytest.mark.parametrize("q", [1, 4, 7, 13])
    def test_lengths_add_up(self, q):
        x = torus_word(5, q)
        d = block_decompose(x)
        assert sum(len(b) for b in d.blocks) + len(d.remainder) == len(x)
        assert d.square_count <= len(d.blocks)
        for b, e in zip(d.blocks, d.exposed):
            assert e is not None and braid_equal(b, e)
