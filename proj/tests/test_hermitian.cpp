#include <doctest.h>

#include <acm/hermitian.hpp>

#include "test_support.hpp"

#include <cmath>

using namespace acm;
using testsupport::bitwise_equal;
using testsupport::exactly_zero;
using testsupport::random_hermitian;

namespace {

Matrix pauli_x() {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
    return m;
}

}  // namespace

TEST_SUITE("hermitian") {

TEST_CASE("hs_norm of the identity is one at every dimension") {
    for (Index n : {1, 2, 5, 17}) {
        CHECK(hs_norm(Matrix::Identity(n, n)) == 1.0);
    }
}

TEST_CASE("hs_norm known values") {
    CHECK(hs_norm(Matrix::Zero(3, 3)) == 0.0);
    CHECK(hs_norm(pauli_x()) == 1.0);
    Matrix m(1, 1);
    m << Complex(-2.0, 0.0);
    CHECK(hs_norm(m) == 2.0);
}

TEST_CASE("hs_norm rejects empty and non-square input") {
    CHECK_THROWS_AS(hs_norm(Matrix(0, 0)), dimension_error);
    CHECK_THROWS_AS(hs_norm(Matrix(2, 3)), dimension_error);
}

TEST_CASE("op_norm known values") {
    CHECK(op_norm(HermitianMatrix::Identity(4)) == doctest::Approx(1.0).epsilon(1e-12));
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = Complex(-0.5, 0);
    d(1, 1) = Complex(0.25, 0);
    CHECK(op_norm(HermitianMatrix{d}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(op_norm(HermitianMatrix{pauli_x()}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hs_norm never exceeds op_norm on random Hermitian matrices") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        HermitianMatrix h = random_hermitian(12, seed);
        CHECK(hs_norm(h) <= op_norm(h) + 1e-10);
    }
}

TEST_CASE("both norms are invariant under unitary conjugation") {
    HermitianMatrix h = random_hermitian(10, 3);
    UnitaryBasis q = random_unitary(10, 77);
    HermitianMatrix rotated{conjugate(h.data, q)};
    CHECK(hs_norm(rotated) == doctest::Approx(hs_norm(h)).epsilon(1e-9));
    CHECK(op_norm(rotated) == doctest::Approx(op_norm(h)).epsilon(1e-9));
}

TEST_CASE("commutator known values") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = Complex(1, 0);
    d(1, 1) = Complex(2, 0);
    Matrix c = commutator(d, pauli_x());
    CHECK(c(0, 0) == Complex(0, 0));
    CHECK(c(0, 1) == Complex(-1, 0));
    CHECK(c(1, 0) == Complex(1, 0));
    CHECK(c(1, 1) == Complex(0, 0));
    CHECK(exactly_zero(commutator(d, d)));
    CHECK(exactly_zero(commutator(Matrix::Identity(2, 2), pauli_x())));
}

TEST_CASE("commutator rejects mismatched dimensions") {
    CHECK_THROWS_AS(commutator(Matrix::Identity(2, 2), Matrix::Identity(3, 3)),
                    dimension_error);
}

TEST_CASE("commutator_norm is bounded by twice the product of factor norms") {
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
        HermitianMatrix a = random_hermitian(8, seed);
        HermitianMatrix b = random_hermitian(8, seed + 1000);
        CHECK(commutator_norm(a, b) <= 2.0 * op_norm(a) * hs_norm(b) + 1e-9);
    }
}

TEST_CASE("hermitize known values") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = Complex(1, 0);
    HermitianMatrix h = hermitize(m);
    CHECK(h.data(0, 0) == Complex(0, 0));
    CHECK(h.data(0, 1) == Complex(0.5, 0));
    CHECK(h.data(1, 0) == Complex(0.5, 0));
    CHECK(h.data(1, 1) == Complex(0, 0));
}

TEST_CASE("hermitize fixes Hermitian input bitwise and is idempotent") {
    HermitianMatrix h = random_hermitian(9, 5);
    CHECK(bitwise_equal(hermitize(h.data).data, h.data));
    Matrix g = random_gaussian(9, 6);
    HermitianMatrix once = hermitize(g);
    CHECK(bitwise_equal(hermitize(once.data).data, once.data));
    CHECK(once.is_hermitian(0.0));
}

TEST_CASE("eigh recovers a diagonal spectrum in ascending order") {
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = Complex(3, 0);
    d(1, 1) = Complex(1, 0);
    d(2, 2) = Complex(2, 0);
    Eigensystem es = eigh(HermitianMatrix{d});
    CHECK(es.spectrum.values(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(es.spectrum.values(1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(es.spectrum.values(2) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("eigh known two by two spectrum") {
    Eigensystem es = eigh(HermitianMatrix{pauli_x()});
    CHECK(es.spectrum.values(0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(es.spectrum.values(1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigh reconstructs random Hermitian matrices") {
    for (std::uint64_t seed = 50; seed < 56; ++seed) {
        const Index n = 16;
        HermitianMatrix h = random_hermitian(n, seed);
        Eigensystem es = eigh(h);
        es.basis.check(Tolerances{});
        for (Index i = 0; i + 1 < n; ++i)
            CHECK(es.spectrum.values(i) <= es.spectrum.values(i + 1));
        CHECK(diag_residual(h, es) <= 1e-10 * static_cast<double>(n));
        Matrix rebuilt = es.basis.q *
                         es.spectrum.values.cast<Complex>().asDiagonal() *
                         es.basis.q.adjoint();
        CHECK(hs_norm(Matrix(rebuilt - h.data)) <= 1e-10 * static_cast<double>(n));
    }
}

TEST_CASE("eigh rejects empty input") {
    CHECK_THROWS_AS(eigh(HermitianMatrix{Matrix(0, 0)}), dimension_error);
}

TEST_CASE("conjugate by the identity is the bitwise identity map") {
    HermitianMatrix h = random_hermitian(6, 8);
    UnitaryBasis id = UnitaryBasis::Identity(6);
    CHECK(bitwise_equal(conjugate(h.data, id), h.data));
}

TEST_CASE("conjugate by a permutation relabels a diagonal matrix") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = Complex(0.25, 0);
    d(1, 1) = Complex(-0.75, 0);
    Matrix swap = Matrix::Zero(2, 2);
    swap(0, 1) = Complex(1, 0);
    swap(1, 0) = Complex(1, 0);
    Matrix rotated = conjugate(d, UnitaryBasis{swap});
    CHECK(rotated(0, 0) == Complex(-0.75, 0));
    CHECK(rotated(1, 1) == Complex(0.25, 0));
}

TEST_CASE("conjugate rejects mismatched dimensions") {
    CHECK_THROWS_AS(conjugate(Matrix::Identity(3, 3), UnitaryBasis::Identity(2)),
                    dimension_error);
}

TEST_CASE("HermitianMatrix::check flags asymmetry and bad shape") {
    Matrix m = Matrix::Identity(3, 3);
    m(0, 1) = Complex(1e-3, 0);
    CHECK_THROWS_AS(HermitianMatrix{m}.check(Tolerances{}), domain_error);
    CHECK_THROWS_AS((HermitianMatrix{Matrix(2, 3)}.check(Tolerances{})), dimension_error);
    CHECK_NOTHROW(HermitianMatrix::Identity(3).check(Tolerances{}));
}

TEST_CASE("UnitaryBasis::check flags non-unitary input") {
    Matrix m = Matrix::Identity(3, 3);
    m(0, 0) = Complex(2, 0);
    CHECK_THROWS_AS(UnitaryBasis{m}.check(Tolerances{}), domain_error);
    CHECK_NOTHROW(random_unitary(5, 9).check(Tolerances{}));
}

TEST_CASE("diag_residual is tiny for a correct eigensystem") {
    HermitianMatrix h = random_hermitian(12, 13);
    Eigensystem es = eigh(h);
    CHECK(diag_residual(h, es) <= 1e-11 * 12);
    es.spectrum.values(0) += 1e-3;
    CHECK(diag_residual(h, es) >= 1e-4);
}

}
