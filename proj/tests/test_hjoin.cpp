#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "dlap/deformed.hpp"
#include "dlap/error.hpp"
#include "dlap/hjoin.hpp"
#include "dlap/verify.hpp"

using namespace dlap;

namespace {

ComponentSpec fam(FamilySpec f) { return ComponentSpec::from_family(f); }

HJoinSpec figure4() {
    return {path_graph(3), {fam(FamilySpec::cycle(4)), fam(FamilySpec::path(2)), fam(FamilySpec::cycle(6))}};
}

HJoinSpec figure5() {
    return {path_graph(4),
            {fam(FamilySpec::path(2)), fam(FamilySpec::cycle(3)), fam(FamilySpec::cycle(3)), fam(FamilySpec::path(2))}};
}

HJoinSpec figure6() {
    return {cycle_graph(4),
            {fam(FamilySpec::path(2)), fam(FamilySpec::cycle(3)), fam(FamilySpec::cycle(3)), fam(FamilySpec::path(2))}};
}

Spectrum oracle(const HJoinSpec& spec, double s) {
    return symmetric_spectrum(deformed_matrix(assemble_graph(spec), s));
}

const double kSGrid[] = {-1.5, -1.0, -0.5, 0.0, 0.3, 0.4, 1.0, 2.0};

}  // namespace

TEST_CASE("validate_spec") {
    HJoinValidation v = validate_spec(figure4());
    CHECK(v.r == 3);
    CHECK(v.orders == std::vector<std::size_t>{4, 2, 6});
    CHECK(v.degrees == std::vector<std::size_t>{2, 1, 2});
    CHECK(v.neighbor_orders == std::vector<std::size_t>{2, 10, 2});

    HJoinSpec irregular{path_graph(2), {fam(FamilySpec::path(3)), fam(FamilySpec::path(2))}};
    try {
        validate_spec(irregular);
        FAIL("expected regularity error");
    } catch (const RegularityError& e) {
        CHECK(e.component() == 0);
    }

    HJoinSpec disconnected{Graph(2, {}), {fam(FamilySpec::path(2)), fam(FamilySpec::path(2))}};
    CHECK_THROWS_AS(validate_spec(disconnected), StructureError);

    HJoinSpec miscount{path_graph(3), {fam(FamilySpec::path(2))}};
    CHECK_THROWS_AS(validate_spec(miscount), ParameterError);
}

TEST_CASE("assemble_graph layout") {
    Graph g4 = assemble_graph(figure4());
    CHECK(g4.order() == 12);
    CHECK(g4.size() == 31);
    // C4 on 0..3, P2 on 4..5, C6 on 6..11, joined across H-edges.
    CHECK(g4.has_edge(0, 1));
    CHECK(g4.has_edge(3, 0));
    CHECK(g4.has_edge(4, 5));
    CHECK(g4.has_edge(0, 4));
    CHECK(g4.has_edge(5, 11));
    CHECK_FALSE(g4.has_edge(0, 6));
    CHECK_FALSE(g4.has_edge(0, 2));

    Graph g5 = assemble_graph(figure5());
    CHECK(g5.order() == 10);
    CHECK(g5.size() == 1 + 3 + 3 + 1 + 6 + 9 + 6);

    CHECK(assemble_graph({path_graph(2), {fam(FamilySpec::path(1)), fam(FamilySpec::path(1))}}) == path_graph(2));

    HJoinSpec spectral{path_graph(2), {ComponentSpec::from_spectrum({1, -1}), fam(FamilySpec::path(2))}};
    CHECK_THROWS_AS(assemble_graph(spectral), PreconditionError);
}

TEST_CASE("block eigenvalues") {
    const HJoinSpec spec = figure4();
    for (double s : kSGrid) {
        CHECK(component_lambda1(spec, 0, s) == doctest::Approx(3 * s * s - 2 * s + 1));
        CHECK(component_lambda1(spec, 1, s) == doctest::Approx(10 * s * s - s + 1));
        CHECK(component_lambda1(spec, 2, s) == doctest::Approx(3 * s * s - 2 * s + 1));

        const double base = 3 * s * s + 1;
        CHECK(spectra_equal(component_block_spectrum(spec, 0, s),
                            Spectrum({base - 2 * s, base, base, base + 2 * s}), 1e-12));
        CHECK(spectra_equal(component_block_spectrum(spec, 2, s),
                            Spectrum({base - 2 * s, base - s, base - s, base + s, base + s, base + 2 * s}), 1e-12));
    }
    CHECK_THROWS_AS(component_lambda1(spec, 3, 1.0), ParameterError);
}

TEST_CASE("quotient matrix entries") {
    const double s = 0.7;
    SymMatrix f = quotient_matrix(figure4(), s);
    REQUIRE(f.dim() == 3);
    CHECK(f(0, 0) == doctest::Approx(3 * s * s - 2 * s + 1));
    CHECK(f(1, 1) == doctest::Approx(10 * s * s - s + 1));
    CHECK(f(0, 1) == doctest::Approx(-s * std::sqrt(8.0)));
    CHECK(f(1, 2) == doctest::Approx(-s * std::sqrt(12.0)));
    CHECK(f(0, 2) == 0.0);

    SymMatrix k2 = quotient_matrix({path_graph(2), {fam(FamilySpec::path(1)), fam(FamilySpec::path(1))}}, s);
    CHECK(k2(0, 0) == doctest::Approx(1.0));
    CHECK(k2(0, 1) == doctest::Approx(-s));
}

TEST_CASE("quotient eigenvalues are eigenvalues of the assembled graph") {
    // Row sums of each block of M_G(s) are constant, so the quotient is exact.
    for (const HJoinSpec& spec : {figure4(), figure5(), figure6()}) {
        for (double s : kSGrid) {
            Spectrum full = oracle(spec, s);
            const Spectrum quot = symmetric_spectrum(quotient_matrix(spec, s));
            for (double q : quot.values()) {
                double best = 1e300;
                for (double v : full.values()) best = std::min(best, std::abs(v - q));
                CHECK(best <= 1e-8);
            }
        }
    }
}

TEST_CASE("hjoin_spectrum against the dense oracle on the worked examples") {
    for (const HJoinSpec& spec : {figure4(), figure5(), figure6()})
        for (double s : kSGrid) {
            Spectrum synth = hjoin_spectrum(spec, s);
            CHECK(synth.size() == assemble_graph(spec).order());
            CHECK(spectrum_deviation(synth, oracle(spec, s)) <= 1e-8);
        }

    CHECK(spectra_equal(hjoin_spectrum(figure4(), 1.0), Spectrum({0, 2, 3, 3, 4, 4, 5, 5, 6, 6, 12, 12}), 1e-8));
    CHECK(spectra_equal(hjoin_spectrum(figure5(), 1.0), Spectrum({0, 2, 5, 5, 5, 8, 8, 8, 8, 9}), 1e-8));
    CHECK(spectra_equal(hjoin_spectrum(figure6(), 1.0), Spectrum({0, 5, 5, 7, 7, 8, 8, 8, 8, 10}), 1e-8));
    CHECK(spectra_equal(hjoin_spectrum(figure5(), 0.4),
                        Spectrum({-0.608539, 0.549701, 1.648539, 1.88, 1.88, 2.36, 2.36, 2.36, 2.36, 2.890299}),
                        1e-6));
    CHECK(spectra_equal(hjoin_spectrum(figure6(), 0.4),
                        Spectrum({-0.750728, 1.296944, 1.310728, 2.2, 2.2, 2.36, 2.36, 2.36, 2.36, 3.263056}),
                        1e-6));
    CHECK(hjoin_spectrum(figure4(), 0.0).values() == std::vector<double>(12, 1.0));
}

TEST_CASE("hjoin_spectrum sums to the trace") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> us(-3.0, 3.0);
    for (int trial = 0; trial < 60; ++trial) {
        HJoinSpec spec = random_hjoin_spec(rng);
        Graph g = assemble_graph(spec);
        const double s = us(rng);
        Spectrum sp = hjoin_spectrum(spec, s);
        CHECK(sp.size() == g.order());
        CHECK(std::abs(sp.sum() - deformed_trace(g, s)) <= 1e-8 * static_cast<double>(g.order()) * (1.0 + s * s));
    }
}

TEST_CASE("hjoin_spectrum agrees with the oracle on random specs") {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> us(-2.5, 2.5);
    for (int trial = 0; trial < 80; ++trial) {
        HJoinSpec spec = random_hjoin_spec(rng);
        const double s = us(rng);
        CHECK(spectrum_deviation(hjoin_spectrum(spec, s), oracle(spec, s)) <= 1e-8 * (1.0 + s * s));
    }
}

TEST_CASE("spectrum-only components") {
    HJoinSpec by_value{path_graph(2), {ComponentSpec::from_spectrum({2, 0, 0, -2}), fam(FamilySpec::path(2))}};
    HJoinSpec by_graph{path_graph(2), {fam(FamilySpec::cycle(4)), fam(FamilySpec::path(2))}};
    CHECK(by_value.components[0].degree() == 2);
    CHECK(spectra_equal(hjoin_spectrum(by_value, 1.3), hjoin_spectrum(by_graph, 1.3), 1e-12));
}

TEST_CASE("remove_closest") {
    std::vector<double> v{1.0, 2.0, 3.0};
    remove_closest(v, 2.0 + 1e-10);
    CHECK(v == std::vector<double>{1.0, 3.0});
    CHECK_THROWS_AS(remove_closest(v, 2.0), ConsistencyError);
}

TEST_CASE("tridiagonal_charpoly") {
    CHECK(tridiagonal_charpoly({1.0, 2.0}, {3.0}, 0.0) == doctest::Approx(-7.0));
    CHECK(tridiagonal_charpoly({5.0}, {}, 5.0) == 0.0);
    CHECK_THROWS_AS(tridiagonal_charpoly({}, {}, 0.0), ParameterError);
    CHECK_THROWS_AS(tridiagonal_charpoly({1.0, 2.0}, {}, 0.0), ParameterError);

    // Vanishes on the spectrum of the path-template quotient.
    for (double s : kSGrid) {
        SymMatrix f = quotient_matrix(figure5(), s);
        std::vector<double> diag{f(0, 0), f(1, 1), f(2, 2), f(3, 3)};
        std::vector<double> off{f(0, 1), f(1, 2), f(2, 3)};
        const Spectrum fs = symmetric_spectrum(f);
        for (double q : fs.values()) {
            const double scale = std::pow(1.0 + std::abs(q) + f.max_abs_entry(), 4.0);
            CHECK(std::abs(tridiagonal_charpoly(diag, off, q)) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("closed forms agree with hjoin_spectrum") {
    for (double s : kSGrid) {
        CHECK(spectrum_deviation(closed_form_p3_symmetric(figure4(), s), hjoin_spectrum(figure4(), s)) <= 1e-9);
        CHECK(spectrum_deviation(closed_form_p4_palindrome(figure5(), s), hjoin_spectrum(figure5(), s)) <= 1e-9);
        CHECK(spectrum_deviation(closed_form_c4_palindrome(figure6(), s), hjoin_spectrum(figure6(), s)) <= 1e-9);
    }
    // Other palindromes with unequal orders n1 != n2.
    HJoinSpec p4{path_graph(4), {fam(FamilySpec::cycle(5)), fam(FamilySpec::complete(3)),
                                 fam(FamilySpec::complete(3)), fam(FamilySpec::cycle(5))}};
    HJoinSpec c4{cycle_graph(4), p4.components};
    for (double s : kSGrid) {
        CHECK(spectrum_deviation(closed_form_p4_palindrome(p4, s), oracle(p4, s)) <= 1e-8);
        CHECK(spectrum_deviation(closed_form_c4_palindrome(c4, s), oracle(c4, s)) <= 1e-8);
    }
}

TEST_CASE("closed-form quadratic roots at s = 1") {
    auto p3 = closed_form_p3_symmetric(figure4(), 1.0).values();
    CHECK(std::count_if(p3.begin(), p3.end(), [](double v) { return std::abs(v - 12.0) < 1e-9; }) == 2);
    CHECK(std::abs(p3.front()) < 1e-9);

    Spectrum p4 = closed_form_p4_palindrome(figure5(), 1.0);
    for (double root : {9.0, 2.0, 5.0, 0.0}) {
        double best = 1e300;
        for (double v : p4.values()) best = std::min(best, std::abs(v - root));
        CHECK(best < 1e-9);
    }
}

TEST_CASE("closed forms reject other templates") {
    CHECK_THROWS_AS(closed_form_p3_symmetric(figure5(), 1.0), PreconditionError);
    CHECK_THROWS_AS(closed_form_p4_palindrome(figure6(), 1.0), PreconditionError);
    CHECK_THROWS_AS(closed_form_c4_palindrome(figure5(), 1.0), PreconditionError);
    HJoinSpec lopsided{path_graph(3), {fam(FamilySpec::cycle(4)), fam(FamilySpec::path(2)), fam(FamilySpec::complete(4))}};
    CHECK_THROWS_AS(closed_form_p3_symmetric(lopsided, 1.0), PreconditionError);
    HJoinSpec unmatched{path_graph(4), {fam(FamilySpec::path(2)), fam(FamilySpec::cycle(3)),
                                        fam(FamilySpec::cycle(4)), fam(FamilySpec::path(2))}};
    CHECK_THROWS_AS(closed_form_p4_palindrome(unmatched, 1.0), PreconditionError);
}

TEST_CASE("H-join JSON") {
    std::istringstream in(R"({"h": {"n": 3, "edges": [[0,1],[1,2]]},
        "components": [{"family": "cycle", "n": 4}, {"family": "path", "n": 2}, {"family": "cycle", "n": 6}]})");
    HJoinSpec spec = read_hjoin_json(in);
    CHECK(assemble_graph(spec) == assemble_graph(figure4()));

    std::istringstream mixed(R"({"h": {"n": 2, "edges": [[0,1]]},
        "components": [{"family": "edges", "n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]}, {"spectrum": [1, -1]}]})");
    HJoinSpec m = read_hjoin_json(mixed);
    CHECK(m.components[0].order() == 4);
    CHECK(m.components[1].order() == 2);
    CHECK(m.components[1].degree() == 1);

    std::istringstream bad_family(R"({"h": {"n": 1, "edges": []}, "components": [{"family": "petersen", "n": 10}]})");
    CHECK_THROWS_AS(read_hjoin_json(bad_family), ParseError);
    std::istringstream broken("{\"h\": ");
    CHECK_THROWS_AS(read_hjoin_json(broken), ParseError);
    CHECK_THROWS_AS(read_hjoin_file("/nonexistent/spec.json"), ParseError);
}
