#ifndef SYZYGY_NUMEROLOGY_HPP
#define SYZYGY_NUMEROLOGY_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bwb.hpp"  // AssertionFailure

namespace syzygy {

struct CurveClass {
    int g = 0;
    std::optional<int> gon;
    std::optional<int> cliff;
};

// Gonality of a Brill-Noether generic curve: (g+3)/2 for odd g, (g+2)/2 for
// even g, i.e. floor((g+3)/2).
inline int generic_gonality(int g) {
    if (g < 2) throw std::invalid_argument("generic_gonality: g < 2");
    return (g + 3) / 2;
}

// Brill-Noether number rho(g, r, d) = g - (r+1)(g - d + r).
inline long brill_noether_rho(int g, int r, int d) {
    return static_cast<long>(g) - static_cast<long>(r + 1) * (g - d + r);
}

// Invariants of the rank-2 bundle on a K3 attached to a degree-(k+1) pencil
// on a genus-2k hyperplane section: det = L, c2 = k+1.
struct LMInvariants {
    int k;
    long c1_sq;  // L^2 = 2g - 2 = 4k - 2
    long c2;     // k + 1
    long chi;    // rank-2 Riemann-Roch on a K3: 2 chi(O) + (c1^2 - 2 c2)/2
};

inline LMInvariants lm_chi(int k) {
    if (k < 1) throw std::invalid_argument("lm_chi: k < 1");
    LMInvariants inv;
    inv.k = k;
    inv.c1_sq = 4L * k - 2;
    inv.c2 = k + 1;
    inv.chi = 4 + (inv.c1_sq - 2 * inv.c2) / 2;
    if (inv.chi != k + 2)
        throw AssertionFailure("lm_chi: chi != k + 2 at k = " + std::to_string(k));
    return inv;
}

// The genus/gonality pairs covered by the vanishing theorem.  Checks that
// { (g, gon) : g/3 + 1 <= gon <= g/2 + 1 } coincides with
// { (2k - delta, k + 1 - delta) : k >= 0, 0 <= delta <= k/2 } over
// 2 <= gon <= g <= g_max.
struct Cor2Report {
    int g_max;
    long pairs_in_range = 0;
    bool pass = true;
    std::string counterexample;
};

inline Cor2Report corollary2_range(int g_max) {
    if (g_max < 4) throw std::invalid_argument("corollary2_range: g_max < 4");
    Cor2Report rep;
    rep.g_max = g_max;
    for (int g = 4; g <= g_max; ++g) {
        for (int gon = 2; gon <= g; ++gon) {
            bool in_range = 3 * gon >= g + 3 && 2 * gon <= g + 2;
            // brute-force search for a (k, delta) representation
            bool representable = false;
            for (int k = 0; k <= g + 2 && !representable; ++k)
                for (int delta = 0; 2 * delta <= k; ++delta)
                    if (2 * k - delta == g && k + 1 - delta == gon) {
                        representable = true;
                        break;
                    }
            if (in_range) ++rep.pairs_in_range;
            if (in_range != representable) {
                rep.pass = false;
                std::ostringstream os;
                os << "(g,gon)=(" << g << "," << gon << ") in_range=" << in_range
                   << " representable=" << representable;
                rep.counterexample = os.str();
                throw AssertionFailure("corollary2_range: " + rep.counterexample);
            }
        }
    }
    return rep;
}

// Predicted status of K_{p,1}(C, K_C) for a nonhyperelliptic curve of genus
// g and Clifford index c:
//   p >= g - c - 1  ->  zero (the conjectural direction in general);
//   p == g - c - 2  ->  nonzero (Green-Lazarsfeld nonvanishing);
//   p == 0          ->  zero (trivial);
//   otherwise unknown.
enum class SyzygyPrediction { Zero, ConjecturedZero, Nonzero, Unknown };

struct PredictionRow {
    int p;
    SyzygyPrediction expected;
};

inline std::vector<PredictionRow> green_prediction(int g, int cliff) {
    if (g < 3 || cliff < 0) throw std::invalid_argument("green_prediction: bad input");
    std::vector<PredictionRow> out;
    for (int p = 0; p <= g - 2; ++p) {
        SyzygyPrediction e;
        if (p == g - cliff - 2 && p > 0)
            e = SyzygyPrediction::Nonzero;
        else if (p == 0)
            e = SyzygyPrediction::Zero;
        else if (p >= g - cliff - 1)
            e = SyzygyPrediction::ConjecturedZero;
        else
            e = SyzygyPrediction::Unknown;
        out.push_back({p, e});
    }
    return out;
}

inline const char* prediction_name(SyzygyPrediction p) {
    switch (p) {
    case SyzygyPrediction::Zero: return "zero";
    case SyzygyPrediction::ConjecturedZero: return "conjectured-zero";
    case SyzygyPrediction::Nonzero: return "nonzero";
    case SyzygyPrediction::Unknown: return "unknown";
    }
    return "?";
}

} // namespace syzygy

#endif
