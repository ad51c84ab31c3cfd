#ifndef SYZYGY_GRADED_RING_HPP
#define SYZYGY_GRADED_RING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "monomial.hpp"
#include "primefield.hpp"
#include "sparse_matrix.hpp"

namespace syzygy {

// A random coefficient draw failed a Hilbert-function check; caller should
// reseed and retry.
struct DegenerateSample : std::runtime_error {
    DegenerateSample(int q, long expected, long got)
        : std::runtime_error("degenerate sample: dim R_" + std::to_string(q) + " = " +
                             std::to_string(got) + ", expected " + std::to_string(expected)),
          q(q), expected(expected), got(got) {}
    int q;
    long expected;
    long got;
};

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expected Hilbert function, asserted against every computed graded piece.
struct HilbertOracle {
    enum Kind { None, RationalNormalCurve, CanonicalCurve, K3 } kind = None;
    int param = 0;  // n for RNC, g otherwise

    std::optional<long> expected(int q) const {
        if (q == 0) return 1;
        switch (kind) {
        case RationalNormalCurve:
            return static_cast<long>(param) * q + 1;
        case CanonicalCurve:
            return q == 1 ? param : static_cast<long>(2 * q - 1) * (param - 1);
        case K3:
            return static_cast<long>(q) * q * (param - 1) + 2;
        case None:
            return std::nullopt;
        }
        return std::nullopt;
    }
};

// Basis data for one graded piece R_q.  The ambient degree is q for Quotient
// presentations and e*q for Veronese-quotient presentations; `standard` lists
// the monomials whose classes form a basis of R_q (complement of the echelon
// pivots of the relation space).
struct GradedPiece {
    int q = 0;
    int ambient_degree = 0;
    std::vector<Monomial> ambient;           // grevlex order
    std::map<Monomial, int> ambient_index;
    EchelonForm relations;                   // RREF of the relation space
    std::map<int, int> pivot_row;            // ambient column -> relation row
    std::vector<int> standard_cols;          // ambient columns forming the basis
    std::vector<int> col_to_basis;           // ambient column -> basis index or -1
    std::vector<Monomial> standard;          // basis monomials

    int dim() const { return static_cast<int>(standard.size()); }

    // Coordinates of an ambient form in the standard basis.
    std::vector<std::uint64_t> reduce(const SparseRow& form, const PrimeField& F) const {
        std::vector<std::uint64_t> out(standard.size(), 0);
        for (const auto& [c, v] : form) {
            auto it = pivot_row.find(c);
            if (it == pivot_row.end()) {
                out[col_to_basis[c]] = F.add(out[col_to_basis[c]], v);
            } else {
                // subtract v * (pivot row); the pivot row is fully reduced so
                // its non-pivot entries all sit at standard columns
                for (const auto& [rc, rv] : relations.rows[it->second]) {
                    if (rc == c) continue;
                    int b = col_to_basis[rc];
                    out[b] = F.sub(out[b], F.mul(v, rv));
                }
            }
        }
        return out;
    }
};

// Presentation of a graded section ring over F_p.  Two forms:
//   Quotient          — polynomial ring in n_vars modulo homogeneous generators
//   VeroneseQuotient  — R_q = (forms of degree e*q) / f * (forms of degree e*q - deg f)
struct QuotientForm {
    std::vector<Poly> generators;
};
struct VeroneseQuotientForm {
    int step = 1;  // e
    Poly relation;
};

class GradedRingPresentation {
public:
    GradedRingPresentation(int n_vars, QuotientForm form, PrimeField field,
                           HilbertOracle oracle = {})
        : n_vars_(n_vars), form_(std::move(form)), field_(field), oracle_(oracle),
          cache_(std::make_shared<Cache>()) {}

    GradedRingPresentation(int n_vars, VeroneseQuotientForm form, PrimeField field,
                           HilbertOracle oracle = {})
        : n_vars_(n_vars), form_(std::move(form)), field_(field), oracle_(oracle),
          cache_(std::make_shared<Cache>()) {}

    int n_vars() const { return n_vars_; }
    const PrimeField& field() const { return field_; }
    const HilbertOracle& oracle() const { return oracle_; }
    bool is_quotient() const { return std::holds_alternative<QuotientForm>(form_); }
    const QuotientForm& quotient() const { return std::get<QuotientForm>(form_); }
    const VeroneseQuotientForm& veronese() const { return std::get<VeroneseQuotientForm>(form_); }

    int ambient_degree(int q) const {
        if (is_quotient()) return q;
        return std::get<VeroneseQuotientForm>(form_).step * q;
    }

    int dim(int q) const { return q < 0 ? 0 : piece(q).dim(); }

    // Basis and reducer for R_q.  Throws DegenerateSample on a Hilbert
    // oracle mismatch.
    const GradedPiece& piece(int q) const {
        if (q < 0) throw std::invalid_argument("piece: q < 0");
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->pieces.find(q);
        if (it != cache_->pieces.end()) return *it->second;
        auto p = std::make_unique<GradedPiece>(compute_piece(q));
        const GradedPiece& ref = *p;
        cache_->pieces.emplace(q, std::move(p));
        return ref;
    }

    // Product of two elements given in standard coordinates.
    std::vector<std::uint64_t> multiply_reduce(int q1, const std::vector<std::uint64_t>& a,
                                               int q2, const std::vector<std::uint64_t>& b) const {
        const GradedPiece& P1 = piece(q1);
        const GradedPiece& P2 = piece(q2);
        const GradedPiece& P = piece(q1 + q2);
        if (a.size() != static_cast<std::size_t>(P1.dim()) ||
            b.size() != static_cast<std::size_t>(P2.dim()))
            throw std::invalid_argument("multiply_reduce: coordinate size mismatch");
        std::map<int, std::uint64_t> acc;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (!b[j]) continue;
                Monomial m = monomial_product(P1.standard[i], P2.standard[j]);
                int col = P.ambient_index.at(m);
                std::uint64_t& slot = acc[col];
                slot = field_.add(slot, field_.mul(a[i], b[j]));
            }
        }
        SparseRow form;
        for (const auto& [c, v] : acc)
            if (v) form.push_back({c, v});
        return P.reduce(form, field_);
    }

    // Product of the i-th standard basis element of R_q1 with the j-th of
    // R_q2, reduced into R_{q1+q2}.
    std::vector<std::pair<int, std::uint64_t>> basis_product(int q1, int i, int q2, int j) const {
        const GradedPiece& P1 = piece(q1);
        const GradedPiece& P2 = piece(q2);
        const GradedPiece& P = piece(q1 + q2);
        Monomial m = monomial_product(P1.standard[i], P2.standard[j]);
        int col = P.ambient_index.at(m);
        SparseRow form{{col, 1}};
        auto coords = P.reduce(form, field_);
        std::vector<std::pair<int, std::uint64_t>> out;
        for (std::size_t t = 0; t < coords.size(); ++t)
            if (coords[t]) out.push_back({static_cast<int>(t), coords[t]});
        return out;
    }

private:
    struct Cache {
        std::mutex mu;
        std::map<int, std::unique_ptr<GradedPiece>> pieces;
    };

    GradedPiece compute_piece(int q) const {
        GradedPiece P;
        P.q = q;
        P.ambient_degree = ambient_degree(q);
        P.ambient = monomials_of_degree(n_vars_, P.ambient_degree);
        for (std::size_t i = 0; i < P.ambient.size(); ++i)
            P.ambient_index[P.ambient[i]] = static_cast<int>(i);

        std::vector<SparseRow> rel_rows;
        auto add_multiples = [&](const Poly& f, int cofactor_degree) {
            if (cofactor_degree < 0) return;
            for (const auto& m : monomials_of_degree(n_vars_, cofactor_degree)) {
                std::map<int, std::uint64_t> row;
                for (const auto& [fm, c] : f.terms)
                    row[P.ambient_index.at(monomial_product(m, fm))] = c;
                SparseRow r(row.begin(), row.end());
                if (!r.empty()) rel_rows.push_back(std::move(r));
            }
        };
        if (is_quotient()) {
            for (const Poly& g : std::get<QuotientForm>(form_).generators)
                add_multiples(g, P.ambient_degree - g.deg);
        } else {
            const auto& v = std::get<VeroneseQuotientForm>(form_);
            add_multiples(v.relation, P.ambient_degree - v.relation.deg);
        }

        P.relations = rref_rows(std::move(rel_rows), static_cast<int>(P.ambient.size()), field_);
        for (std::size_t i = 0; i < P.relations.pivots.size(); ++i)
            P.pivot_row[P.relations.pivots[i]] = static_cast<int>(i);
        P.col_to_basis.assign(P.ambient.size(), -1);
        for (std::size_t c = 0; c < P.ambient.size(); ++c) {
            if (!P.pivot_row.count(static_cast<int>(c))) {
                P.col_to_basis[c] = static_cast<int>(P.standard.size());
                P.standard_cols.push_back(static_cast<int>(c));
                P.standard.push_back(P.ambient[c]);
            }
        }

        if (auto want = oracle_.expected(q); want && *want != P.dim())
            throw DegenerateSample(q, *want, P.dim());
        return P;
    }

    int n_vars_;
    std::variant<QuotientForm, VeroneseQuotientForm> form_;
    PrimeField field_;
    HilbertOracle oracle_;
    std::shared_ptr<Cache> cache_;
};

} // namespace syzygy

#endif
