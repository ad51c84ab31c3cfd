#ifndef SYZYGY_KOSZUL_HPP
#define SYZYGY_KOSZUL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graded_ring.hpp"
#include "monomial.hpp"
#include "primefield.hpp"
#include "sparse_matrix.hpp"

namespace syzygy {

struct MissingEntry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Basis of the p-th exterior power of a v_dim-dimensional space: strictly
// increasing index tuples in lexicographic order.
class WedgeBasis {
public:
    WedgeBasis(int v_dim, int p) : v_dim_(v_dim), p_(p) {
        if (p < 0 || v_dim < 0) throw std::invalid_argument("WedgeBasis: bad arguments");
        if (p > v_dim) return;  // empty basis
        std::vector<int> t(p);
        for (int i = 0; i < p; ++i) t[i] = i;
        for (;;) {
            index_[t] = static_cast<int>(tuples_.size());
            tuples_.push_back(t);
            int i = p - 1;
            while (i >= 0 && t[i] == v_dim - p + i) --i;
            if (i < 0) break;
            ++t[i];
            for (int j = i + 1; j < p; ++j) t[j] = t[j - 1] + 1;
        }
    }

    int v_dim() const { return v_dim_; }
    int p() const { return p_; }
    int size() const { return static_cast<int>(tuples_.size()); }
    const std::vector<int>& tuple(int i) const { return tuples_[i]; }
    int index_of(const std::vector<int>& t) const { return index_.at(t); }

private:
    int v_dim_;
    int p_;
    std::vector<std::vector<int>> tuples_;
    std::map<std::vector<int>, int> index_;
};

// Matrix of the Koszul differential
//   delta : wedge^p V (x) R_q  ->  wedge^{p-1} V (x) R_{q+1},   V = R_1,
// delta(e_{i1}^...^e_{ip} (x) f) = sum_j (-1)^{j-1} e_{i1}^..ê_{ij}..^e_{ip}
// (x) x_{ij} f, in the fixed bases: column (wedge tuple, standard monomial),
// row-major with the wedge index major.  For p = 0 the target is zero and the
// matrix has 0 rows.
inline SparseMatrix koszul_differential(const GradedRingPresentation& R, int p, int q) {
    if (p < 0) throw std::invalid_argument("koszul_differential: p < 0");
    const PrimeField& F = R.field();
    int v = R.dim(1);
    WedgeBasis src(v, p);
    int dim_q = q < 0 ? 0 : R.dim(q);
    int ncols = src.size() * dim_q;
    if (p == 0) return SparseMatrix(0, ncols);

    WedgeBasis dst(v, p - 1);
    int dim_q1 = q + 1 < 0 ? 0 : R.dim(q + 1);
    SparseMatrix m(dst.size() * dim_q1, ncols);
    if (ncols == 0 || m.nrows == 0) return m;

    // multiplication tensor x_i * b_j for this strand
    std::vector<std::vector<std::vector<std::pair<int, std::uint64_t>>>> mult(
        v, std::vector<std::vector<std::pair<int, std::uint64_t>>>(dim_q));
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < dim_q; ++j) mult[i][j] = R.basis_product(1, i, q, j);

    std::vector<int> sub(p - 1);
    for (int w = 0; w < src.size(); ++w) {
        const auto& T = src.tuple(w);
        for (int j = 0; j < p; ++j) {
            std::uint64_t sign = (j % 2 == 0) ? 1 : F.neg(1);
            sub.clear();
            for (int t = 0; t < p; ++t)
                if (t != j) sub.push_back(T[t]);
            int wrow = dst.index_of(sub);
            for (int b = 0; b < dim_q; ++b) {
                int col = w * dim_q + b;
                for (const auto& [m1, c] : mult[T[j]][b])
                    m.push(wrow * dim_q1 + m1, col, F.mul(sign, c));
            }
        }
    }
    return m;
}

// dim K_{p,q}(X, L) over F_p: kernel of delta_{p,q} modulo image of
// delta_{p+1,q-1}.
inline int koszul_dim(const GradedRingPresentation& R, int p, int q) {
    if (p < 0 || q < 0) return 0;
    SparseMatrix out = koszul_differential(R, p, q);
    int ker = out.ncols - rank(out, R.field());
    int img = 0;
    if (q >= 1) {
        SparseMatrix in = koszul_differential(R, p + 1, q - 1);
        img = rank(in, R.field());
    }
    return ker - img;
}

struct BettiTable {
    std::string variety_id;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    int g = 0;  // genus when applicable, 0 otherwise
    std::map<std::pair<int, int>, int> entries;  // (p, q) -> dim K_{p,q}

    int at(int p, int q) const {
        auto it = entries.find({p, q});
        if (it == entries.end())
            throw MissingEntry("BettiTable: missing entry (" + std::to_string(p) + "," +
                               std::to_string(q) + ")");
        return it->second;
    }
    bool has(int p, int q) const { return entries.count({p, q}) != 0; }
};

// Full table for 0 <= p <= max_p, 0 <= q <= max_q.  Reuses each differential
// for the two cells it borders; `entry_budget` caps the size of any single
// differential.
inline BettiTable betti_table(const GradedRingPresentation& R, int max_p, int max_q,
                              std::size_t entry_budget = 50'000'000) {
    BettiTable t;
    t.prime = R.field().modulus();
    const PrimeField& F = R.field();
    for (int q = 0; q <= max_q; ++q) {
        // rank of delta_{p,q} for p = 0 .. max_p + 1 feeds both cells
        std::vector<int> rk(max_p + 2, 0);
        std::vector<int> kd(max_p + 2, 0);
        for (int p = 0; p <= max_p + 1; ++p) {
            SparseMatrix d = koszul_differential(R, p, q);
            if (d.nnz() > entry_budget)
                throw ResourceLimit("differential at (" + std::to_string(p) + "," +
                                    std::to_string(q) + ") exceeds entry budget");
            rk[p] = rank(d, F);
            kd[p] = d.ncols - rk[p];
        }
        for (int p = 0; p <= max_p; ++p) {
            int img = 0;
            if (q >= 1) {
                SparseMatrix in = koszul_differential(R, p + 1, q - 1);
                img = rank(in, F);
            }
            t.entries[{p, q}] = kd[p] - img;
        }
    }
    return t;
}

struct DualityRow {
    int p;
    int dim_p2;     // dim K_{p,2}
    int dim_dual;   // dim K_{g-p-2,1}
    bool equal;
};

// Green's duality at the dimension level for a canonical curve of genus g:
// dim K_{p,2} = dim K_{g-p-2,1}.
inline std::vector<DualityRow> duality_check(const BettiTable& t, int g) {
    std::vector<DualityRow> out;
    for (int p = 0; p <= g - 2; ++p) {
        if (!t.has(p, 2) || !t.has(g - p - 2, 1)) continue;
        int a = t.at(p, 2);
        int b = t.at(g - p - 2, 1);
        out.push_back({p, a, b, a == b});
    }
    if (out.empty()) throw MissingEntry("duality_check: no comparable entries");
    return out;
}

// Checks wedge ∘ delta = ±l id on wedge^l V, where delta sends a wedge to
// sum_j (-1)^{j-1} e_{ij} (x) (wedge with e_{ij} removed) and wedge maps
// x (x) beta back to x ^ beta.  The sign must be consistent across all
// trials for a given l.
inline bool wedge_contraction_check(int v_dim, int l, int trials, std::uint64_t seed,
                                    const PrimeField& F) {
    if (l < 1 || l > v_dim) throw std::invalid_argument("wedge_contraction_check: bad l");
    WedgeBasis Wl(v_dim, l);
    WedgeBasis Wl1(v_dim, l - 1);
    SplitMix64 rng(seed);
    std::uint64_t lmod = static_cast<std::uint64_t>(l) % F.modulus();

    int sign_seen = 0;  // +1 or -1 once determined, consistent across trials
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<std::uint64_t> alpha(Wl.size());
        for (auto& c : alpha) c = rng.field_element(F);

        // delta(alpha) in V (x) wedge^{l-1} V, indexed (i, tuple)
        std::vector<std::uint64_t> mid(static_cast<std::size_t>(v_dim) * Wl1.size(), 0);
        std::vector<int> sub(l - 1);
        for (int w = 0; w < Wl.size(); ++w) {
            if (!alpha[w]) continue;
            const auto& T = Wl.tuple(w);
            for (int j = 0; j < l; ++j) {
                std::uint64_t s = (j % 2 == 0) ? 1 : F.neg(1);
                sub.clear();
                for (int t = 0; t < l; ++t)
                    if (t != j) sub.push_back(T[t]);
                std::size_t idx =
                    static_cast<std::size_t>(T[j]) * Wl1.size() + Wl1.index_of(sub);
                mid[idx] = F.add(mid[idx], F.mul(s, alpha[w]));
            }
        }

        // wedge back: x_i (x) e_S -> e_i ^ e_S
        std::vector<std::uint64_t> comp(Wl.size(), 0);
        std::vector<int> merged(l);
        for (int i = 0; i < v_dim; ++i) {
            for (int s = 0; s < Wl1.size(); ++s) {
                std::uint64_t c = mid[static_cast<std::size_t>(i) * Wl1.size() + s];
                if (!c) continue;
                const auto& S = Wl1.tuple(s);
                if (std::find(S.begin(), S.end(), i) != S.end()) continue;
                int pos = static_cast<int>(std::lower_bound(S.begin(), S.end(), i) - S.begin());
                merged.clear();
                merged.insert(merged.end(), S.begin(), S.begin() + pos);
                merged.push_back(i);
                merged.insert(merged.end(), S.begin() + pos, S.end());
                std::uint64_t sgn = (pos % 2 == 0) ? 1 : F.neg(1);
                int w = Wl.index_of(merged);
                comp[w] = F.add(comp[w], F.mul(sgn, c));
            }
        }

        // composite must equal sign * l * alpha for one consistent sign
        for (int cand : {+1, -1}) {
            if (sign_seen && cand != sign_seen) continue;
            std::uint64_t scale = cand > 0 ? lmod : F.neg(lmod);
            bool ok = true;
            for (int w = 0; w < Wl.size() && ok; ++w)
                ok = comp[w] == F.mul(scale, alpha[w]);
            if (ok) {
                sign_seen = cand;
                break;
            }
            if (sign_seen || cand == -1) return false;
        }
    }
    return true;
}

// --- serialization -------------------------------------------------------

inline nlohmann::ordered_json betti_to_json(const BettiTable& t) {
    nlohmann::ordered_json j;
    j["variety"] = t.variety_id;
    j["prime"] = t.prime;
    j["seed"] = t.seed;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [pq, d] : t.entries)
        entries.push_back({pq.first, pq.second, d});
    j["entries"] = entries;
    return j;
}

inline BettiTable betti_from_json(const nlohmann::json& j) {
    BettiTable t;
    t.variety_id = j.at("variety").get<std::string>();
    t.prime = j.at("prime").get<std::uint64_t>();
    t.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& e : j.at("entries"))
        t.entries[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<int>();
    return t;
}

inline std::string betti_to_csv(const BettiTable& t) {
    std::ostringstream os;
    os << "p,q,dim\n";
    for (const auto& [pq, d] : t.entries)
        os << pq.first << "," << pq.second << "," << d << "\n";
    return os.str();
}

} // namespace syzygy

#endif
