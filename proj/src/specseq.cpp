#include "mvkt/specseq.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace mvkt {

namespace {

int wrap2(int q) { return ((q % 2) + 2) % 2; }

}  // namespace

SpectralPage::SpectralPage(int page_number, int dimension)
    : page_number_(page_number), dimension_(dimension) {
    if (page_number < 1) fail(ErrorCode::ShapeMismatch, "page number must be >= 1");
    if (dimension < 0) fail(ErrorCode::InvalidComplex, "page over an empty nerve");
    entries_.resize(static_cast<std::size_t>(dimension) + 1);
}

const FgAbelianGroup& SpectralPage::entry(int p, int q) const {
    if (p < 0 || p > dimension_)
        fail(ErrorCode::DegreeOutOfRange, "page entry p = " + std::to_string(p));
    return entries_[static_cast<std::size_t>(p)][static_cast<std::size_t>(wrap2(q))];
}

void SpectralPage::set_entry(int p, int q, FgAbelianGroup g) {
    if (p < 0 || p > dimension_)
        fail(ErrorCode::DegreeOutOfRange, "page entry p = " + std::to_string(p));
    entries_[static_cast<std::size_t>(p)][static_cast<std::size_t>(wrap2(q))] = std::move(g);
}

Slot SpectralPage::differential_target(Slot source) const {
    return {source.p - page_number_, wrap2(source.q + page_number_ - 1)};
}

void SpectralPage::set_differential(Slot source, GroupMap d) {
    source.q = wrap2(source.q);
    const Slot target = differential_target(source);
    if (source.p > dimension_ || target.p < 0)
        fail(ErrorCode::DegreeOutOfRange, "differential leaves the page");
    if (!(d.source() == entry(source.p, source.q)) ||
        !(d.target() == entry(target.p, target.q)))
        fail(ErrorCode::ShapeMismatch, "differential groups do not match the page entries");
    differentials_[source] = std::move(d);
}

SpectralPage e1_page(const SimplicialComplex& nerve, const CoefficientSystem& cs) {
    if (nerve.dimension() < 0) fail(ErrorCode::InvalidComplex, "empty nerve");
    SpectralPage page(1, nerve.dimension());

    // M_q = K_{q-1}(D): the boundary suspension shift is absorbed here once
    const FgAbelianGroup m[2] = {cs.k(-1), cs.k(0)};

    for (int p = 0; p <= nerve.dimension(); ++p)
        for (int q = 0; q < 2; ++q)
            page.set_entry(p, q, direct_sum_power(m[q], nerve.simplex_count(p)));

    for (int p = 1; p <= nerve.dimension(); ++p) {
        const IntMatrix d = boundary_matrix(nerve, p);
        for (int q = 0; q < 2; ++q) {
            const Index copies = m[q].generator_count();
            page.set_differential({p, q}, GroupMap(page.entry(p, q), page.entry(p - 1, q),
                                                   identity_kron(copies, d)));
        }
    }
    return page;
}

SpectralPage e2_page(const SpectralPage& e1, const SimplicialComplex& nerve,
                     const CoefficientSystem& cs) {
    if (e1.page_number() != 1)
        fail(ErrorCode::ShapeMismatch, "e2_page consumes an E1 page");
    if (e1.dimension() != nerve.dimension())
        fail(ErrorCode::ShapeMismatch, "page dimension differs from the nerve");

    const IntegerChainComplex cc = chain_complex(nerve);
    std::vector<FgAbelianGroup> h;
    for (int p = 0; p <= nerve.dimension(); ++p) h.push_back(homology_at(cc, p));

    const FgAbelianGroup m[2] = {cs.k(-1), cs.k(0)};
    SpectralPage page(2, nerve.dimension());
    for (int p = 0; p <= nerve.dimension(); ++p) {
        for (int q = 0; q < 2; ++q) {
            FgAbelianGroup value = tensor(h[static_cast<std::size_t>(p)], m[q]);
            if (p >= 1)
                value = direct_sum(value, tor(h[static_cast<std::size_t>(p - 1)], m[q]));
            page.set_entry(p, q, std::move(value));
        }
    }
    page.set_kunneth_flag(e1.kunneth_flag());
    return page;
}

SpectralPage attach_d2(const SpectralPage& e2, const SimplicialComplex& nerve,
                       const CoefficientSystem& cs, const Cocycle2& twist) {
    if (e2.page_number() != 2)
        fail(ErrorCode::ShapeMismatch, "attach_d2 consumes an E2 page");
    if (!e2.differentials().empty())
        fail(ErrorCode::ShapeMismatch, "E2 differentials already attached");

    SpectralPage page = e2;
    const CocycleClass cls = cohomology_class(twist, nerve);
    if (cls.trivial) {
        page.set_kunneth_flag(true);
        return page;  // d2 vanishes; nothing to attach
    }

    page.set_kunneth_flag(false);
    if (!is_connected(nerve))
        fail(ErrorCode::TwistedRunUnsupported,
             "nontrivial twist over a disconnected nerve");
    if (!is_closed_surface(nerve))
        fail(ErrorCode::TwistedRunUnsupported,
             "nontrivial twist over a nerve that is not a closed surface");
    if (!fundamental_cycle(nerve).has_value())
        fail(ErrorCode::TwistedRunUnsupported,
             "nontrivial twist over a nerve without a fundamental cycle");
    if (!(cs.k0 == cs.k1))
        fail(ErrorCode::CoefficientDegreeMismatch,
             "twisted d2 needs K_0(D) and K_1(D) with one canonical form");

    for (int q = 0; q < 2; ++q) {
        // the twisted differential acts through the coefficient automorphism
        // of the source degree: E2_{2,q} carries M_q = K_{q-1}(D)
        const GroupMap& phi = cs.phi(q - 1);
        GroupMap d2(page.entry(2, q), page.entry(0, q + 1),
                    subtract_identity(phi).matrix());
        page.set_differential({2, q}, std::move(d2));
    }
    return page;
}

SpectralPage e_infinity(const SpectralPage& page_with_d2) {
    if (page_with_d2.page_number() != 2)
        fail(ErrorCode::ShapeMismatch, "e_infinity consumes the page with d2 attached");
    if (page_with_d2.dimension() > 2)
        fail(ErrorCode::UnsupportedDimension,
             "nerves of dimension > 2 may carry higher differentials");

    SpectralPage out(3, page_with_d2.dimension());
    for (int p = 0; p <= page_with_d2.dimension(); ++p)
        for (int q = 0; q < 2; ++q) out.set_entry(p, q, page_with_d2.entry(p, q));

    for (const auto& [source, d] : page_with_d2.differentials()) {
        const Slot target = page_with_d2.differential_target(source);
        out.set_entry(source.p, source.q, kernel_group(d));
        out.set_entry(target.p, target.q, cokernel_group(d));
    }
    out.set_kunneth_flag(page_with_d2.kunneth_flag());
    return out;
}

AssembledKTheory assemble(const SpectralPage& einf) {
    AssembledKTheory out;
    for (int n = 0; n < 2; ++n) {
        GradedDegree& deg = out.degree[static_cast<std::size_t>(n)];
        for (int p = 0; p <= einf.dimension(); ++p)
            deg.graded_pieces.push_back(einf.entry(p, n - p));

        std::vector<const FgAbelianGroup*> nonzero;
        for (const FgAbelianGroup& g : deg.graded_pieces)
            if (!g.is_trivial()) nonzero.push_back(&g);

        if (nonzero.empty()) {
            deg.determined = FgAbelianGroup{};
            deg.rule = "all pieces vanish";
            continue;
        }
        if (nonzero.size() == 1) {
            deg.determined = *nonzero.front();
            deg.rule = "single nonzero piece";
            continue;
        }

        bool coprime = true;
        for (std::size_t i = 0; i < nonzero.size() && coprime; ++i) {
            if (!nonzero[i]->is_finite()) {
                coprime = false;
                break;
            }
            for (std::size_t j = i + 1; j < nonzero.size(); ++j)
                if (gcd(nonzero[i]->torsion_order(), nonzero[j]->torsion_order()) != 1) {
                    coprime = false;
                    break;
                }
        }

        if (coprime || einf.kunneth_flag()) {
            FgAbelianGroup sum;
            for (const FgAbelianGroup& g : deg.graded_pieces) sum = direct_sum(sum, g);
            deg.determined = std::move(sum);
            deg.rule = coprime ? "pairwise coprime torsion orders" : "Kunneth flag";
        } else {
            deg.determined = std::nullopt;
            deg.rule = "extension ambiguous";
        }
    }
    return out;
}

AssembledKTheory baseline_untwisted(const SimplicialComplex& nerve,
                                    const CoefficientSystem& cs) {
    return run_pipeline(nerve, cs, Cocycle2::trivial(nerve)).assembled;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::obstruction_proven: return "obstruction_proven";
        case Verdict::no_obstruction_detected: return "no_obstruction_detected";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

ObstructionOutcome compare_assembled(const AssembledKTheory& twisted,
                                     const AssembledKTheory& baseline) {
    ObstructionOutcome out;
    bool mismatch = false;

    for (int n = 0; n < 2; ++n) {
        Index rank_t = 0, rank_b = 0;
        Int order_t = 1, order_b = 1;
        for (const auto& g : twisted.degree[static_cast<std::size_t>(n)].graded_pieces) {
            rank_t += g.free_rank();
            order_t *= g.torsion_order();
        }
        for (const auto& g : baseline.degree[static_cast<std::size_t>(n)].graded_pieces) {
            rank_b += g.free_rank();
            order_b *= g.torsion_order();
        }
        if (rank_t != rank_b) {
            mismatch = true;
            out.reasons.push_back("degree " + std::to_string(n) + ": free rank " +
                                  std::to_string(rank_t) + " vs " + std::to_string(rank_b));
        }
        if (order_t != order_b) {
            mismatch = true;
            out.reasons.push_back("degree " + std::to_string(n) + ": torsion order " +
                                  order_t.get_str() + " vs " + order_b.get_str());
        }
    }
    if (mismatch) {
        out.verdict = Verdict::obstruction_proven;
        return out;
    }

    bool all_determined = true;
    bool groups_equal = true;
    for (int n = 0; n < 2; ++n) {
        const auto& t = twisted.degree[static_cast<std::size_t>(n)];
        const auto& b = baseline.degree[static_cast<std::size_t>(n)];
        if (!t.determined || !b.determined) {
            all_determined = false;
            const std::string side = (!t.determined && !b.determined) ? "both runs"
                                     : (!t.determined ? "the twisted run" : "the baseline run");
            out.reasons.push_back("degree " + std::to_string(n) +
                                  ": extension unresolved in " + side);
        } else if (!(*t.determined == *b.determined)) {
            groups_equal = false;
            out.reasons.push_back(
                "degree " + std::to_string(n) +
                ": determined groups differ although the robust invariants agree");
        }
    }
    if (all_determined && groups_equal) {
        out.verdict = Verdict::no_obstruction_detected;
        out.reasons.push_back("extension-robust invariants and determined groups agree");
        return out;
    }
    out.verdict = Verdict::inconclusive;
    return out;
}

PipelineResult run_pipeline(const SimplicialComplex& nerve, const CoefficientSystem& cs,
                            const Cocycle2& twist) {
    validate_involution(cs);
    PipelineResult result;
    result.cocycle_class = cohomology_class(twist, nerve);
    result.e1 = e1_page(nerve, cs);
    SpectralPage e2_plain = e2_page(result.e1, nerve, cs);
    result.e2 = attach_d2(e2_plain, nerve, cs, twist);
    result.e3 = e_infinity(result.e2);
    result.assembled = assemble(result.e3);
    return result;
}

}  // namespace mvkt
