import random

import pytest

import kronmul

F = [274, 610, 887, 621]
G = [553, 298, 424, 790]
H = [151522, 418982, 788467, 1082839, 1043046, 964034, 490590]


def convolve(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


@pytest.mark.parametrize("mul", [kronmul.ks1, kronmul.ks2, kronmul.ks3, kronmul.ks4])
def test_paper_example(mul):
    assert mul(F, G) == H


@pytest.mark.parametrize("variant", ["ks1", "ks2", "ks3", "ks4"])
def test_random_big_coefficients(variant):
    rng = random.Random(5)
    for _ in range(30):
        bits = rng.randint(1, 200)
        f = [rng.getrandbits(bits) for _ in range(rng.randint(1, 40))]
        g = [rng.getrandbits(bits) for _ in range(rng.randint(1, 40))]
        assert kronmul.ks_mul(variant, f, g, parallel=True) == convolve(f, g)


def test_schoolbook_matches_python():
    assert kronmul.schoolbook(F, G) == convolve(F, G)


def test_mod_mul():
    n = 1000003
    expected = [151522, 418982, 788467, 82836, 43043, 964034, 490590]
    for variant in ["auto", "ks1", "ks2", "ks3", "ks4"]:
        assert kronmul.mod_mul(F, G, n, variant) == expected
    with pytest.raises(kronmul.PreconditionError):
        kronmul.mod_mul([n], G, n)


def test_params_and_choice():
    p = kronmul.derive_params(4, 4, 10)
    assert (p.e, p.n1, p.n2, p.n4) == (2, 22, 11, 6)
    assert kronmul.choose_variant(1, 48) == "ks1"
    assert kronmul.choose_variant(1000, 48) == "ks4"
    assert kronmul.choose_variant(16, 4) == "ks1"


def test_reconstruct():
    h, delta, eps = kronmul.reconstruct_overlapped([3, 3, 7, 0], [0, 4, 3, 6], 3)
    assert h == [3, 11, 6]
    assert delta == [0, 0, 0] and eps == [0, 0, 0]
    with pytest.raises(kronmul.ReconstructionError):
        kronmul.reconstruct_overlapped([0, 3], [3, 0], 2)


def test_bivariate():
    rng = random.Random(9)
    f = [[rng.randrange(7) for _ in range(4)] for _ in range(3)]
    g = [[rng.randrange(7) for _ in range(4)] for _ in range(3)]
    expected = kronmul.bivariate_mod(f, g, 7, "schoolbook")
    for algorithm in ["standard", "reciprocal", "negated", "four"]:
        assert kronmul.bivariate_mod(f, g, 7, algorithm) == expected
    with pytest.raises(kronmul.RingError):
        kronmul.bivariate_mod(f, g, 8, "four")


def test_rejects_negative():
    with pytest.raises(kronmul.PreconditionError):
        kronmul.ks1([-1], [1])
