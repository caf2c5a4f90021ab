#include "divknot/defect.hpp"

#include "divknot/errors.hpp"

#include <chrono>
#include <cstdint>
#include <set>

namespace divknot {

IntMatrix restrict_form(const IntMatrix& seifert, const SubgroupBasis& subgroup) {
    if (seifert.rows() != seifert.cols()) throw std::invalid_argument("restrict_form: Seifert matrix is not square");
    if (subgroup.rank() == 0) return IntMatrix(0, 0);
    if (subgroup.ambient_dimension() != seifert.rows())
        throw std::invalid_argument("restrict_form: subgroup vectors have length " +
                                    std::to_string(subgroup.ambient_dimension()) + ", expected " +
                                    std::to_string(seifert.rows()));
    if (rational_rank(subgroup.vectors) != subgroup.rank())
        throw std::invalid_argument("restrict_form: subgroup vectors are linearly dependent");
    return subgroup.vectors * seifert * subgroup.vectors.transpose();
}

std::optional<DefectCertificate> verify_alex_trivial(const IntMatrix& seifert, const SubgroupBasis& subgroup,
                                                     long genus) {
    DefectCertificate cert;
    cert.subgroup = subgroup;
    cert.restricted = restrict_form(seifert, subgroup);
    const auto unit = is_unit(laurent_det(alexander_matrix(cert.restricted)));
    if (!unit) return std::nullopt;
    cert.unit = *unit;
    cert.upper_bound = genus - static_cast<long>(subgroup.rank() / 2);
    return cert;
}

bool revalidate(const IntMatrix& seifert, long genus, const DefectCertificate& certificate) {
    try {
        const auto fresh = verify_alex_trivial(seifert, certificate.subgroup, genus);
        return fresh && fresh->restricted == certificate.restricted && fresh->unit == certificate.unit &&
               fresh->upper_bound == certificate.upper_bound && certificate.subgroup.rank() % 2 == 0;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

SubgroupBasis snail_subgroup(int n) {
    if (n < 1) throw std::invalid_argument("snail_subgroup: n must be positive");
    const Eigen::Index m = n - 1;
    SubgroupBasis v{IntMatrix::Zero(2 * m, 2 * n)};
    for (Eigen::Index i = 0; i < m; ++i) {
        // a_{i+1} = α_{i+2} - γ_{i+1},  b_{i+1} = γ_{i+2}   (zero-based: α_{i+1}, γ_i, γ_{i+1})
        v.vectors(i, i + 1) = 1;
        v.vectors(i, n + i) = -1;
        v.vectors(m + i, n + i + 1) = 1;
    }
    return v;
}

std::vector<Eigen::Index> snail_frame(const DivideDiagram& diagram, const SeifertData& data, int n) {
    const auto& regions = diagram.regions;
    const std::size_t innermost = snail_innermost_region(diagram.map, regions);

    // Inner regions from the inside out: each layer touches exactly one new inner region.
    std::vector<std::size_t> layers{innermost};
    std::vector<bool> used(regions.size(), false);
    used[innermost] = true;
    while (static_cast<int>(layers.size()) < n) {
        std::optional<std::size_t> next;
        for (const auto& r : regions) {
            if (!r.is_inner || used[r.id] || shared_edges(diagram.map, regions[layers.back()], r) == 0) continue;
            if (next) throw InvariantViolation("snail_frame: inner regions do not form a chain");
            next = r.id;
        }
        if (!next) throw InvariantViolation("snail_frame: fewer inner regions than double points");
        used[*next] = true;
        layers.push_back(*next);
    }

    std::vector<Eigen::Index> frame;
    auto position = [&](auto pred, const std::string& what) {
        for (const auto& g : data.basis)
            if (pred(g)) return static_cast<Eigen::Index>(g.ordinal);
        throw InvariantViolation("snail_frame: no generator for " + what);
    };
    for (std::size_t id : layers)
        frame.push_back(position(
            [&](const Generator& g) { return g.kind != GeneratorKind::DoublePoint && g.region == id; },
            "region " + std::to_string(id)));
    for (int i = 1; i <= n; ++i) {
        const int vertex = diagram.map.vertex_index("v" + std::to_string(i));
        frame.push_back(position(
            [&](const Generator& g) { return g.kind == GeneratorKind::DoublePoint && g.vertex == vertex; },
            "v" + std::to_string(i)));
    }
    return frame;
}

SubgroupBasis snail_subgroup_in_basis(const DivideDiagram& diagram, const SeifertData& data, int n) {
    const SubgroupBasis canonical = snail_subgroup(n);
    const auto frame = snail_frame(diagram, data, n);
    SubgroupBasis out{IntMatrix::Zero(canonical.rank(), static_cast<Eigen::Index>(data.size()))};
    for (Eigen::Index r = 0; r < canonical.rank(); ++r)
        for (Eigen::Index c = 0; c < canonical.ambient_dimension(); ++c)
            out.vectors(r, frame[static_cast<std::size_t>(c)]) = canonical.vectors(r, c);
    return out;
}

namespace {

using SmallMatrix = Matrix<std::int64_t>;
using SmallVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

struct Candidate {
    SmallVector coords;
    SmallVector right;  // A c, so that S(x, c) = x . right
};

/// Advances an odometer whose i-th digit runs over [0, limits[i]); false on wrap-around.
bool advance(std::vector<int>& digits, const std::vector<int>& limits) {
    for (std::size_t pos = digits.size(); pos-- > 0;) {
        if (++digits[pos] < limits[pos]) return true;
        digits[pos] = 0;
    }
    return false;
}

/// Next k-subset of {0, .., n-1} in lexicographic order; false after the last.
bool next_combination(std::vector<Eigen::Index>& support, Eigen::Index n) {
    const auto k = static_cast<Eigen::Index>(support.size());
    Eigen::Index i = k - 1;
    while (i >= 0 && support[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++support[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i + 1; j < k; ++j)
        support[static_cast<std::size_t>(j)] = support[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

/// Box vectors with entries in [-k, k] and first nonzero entry positive,
/// ordered by support size, then support, then values (1..k before -1..-k).
std::vector<SmallVector> enumerate_box(Eigen::Index dim, int bound, std::size_t cap, bool& truncated) {
    std::vector<SmallVector> out;
    truncated = false;
    auto value = [bound](int digit, bool leading) { return leading || digit < bound ? digit + 1 : bound - digit - 1; };
    for (Eigen::Index size = 1; size <= dim; ++size) {
        std::vector<Eigen::Index> support(static_cast<std::size_t>(size));
        for (Eigen::Index i = 0; i < size; ++i) support[static_cast<std::size_t>(i)] = i;
        std::vector<int> limits(static_cast<std::size_t>(size), 2 * bound);
        limits[0] = bound;
        do {
            std::vector<int> digits(static_cast<std::size_t>(size), 0);
            do {
                if (out.size() == cap) {
                    truncated = true;
                    return out;
                }
                SmallVector v = SmallVector::Zero(dim);
                for (std::size_t i = 0; i < digits.size(); ++i) v(support[i]) = value(digits[i], i == 0);
                out.push_back(std::move(v));
            } while (advance(digits, limits));
        } while (next_combination(support, dim));
    }
    return out;
}

class DefectSearch {
public:
    DefectSearch(const SmallMatrix& a, long genus, const SearchConfig& config, SearchStats& stats)
        : genus_(genus), config_(config), stats_(stats), start_(std::chrono::steady_clock::now()) {
        bool truncated = false;
        for (auto& v : enumerate_box(a.rows(), config.coeff_bound, config.max_candidates, truncated)) {
            Candidate c{v, a * v};
            if (c.coords.dot(c.right) == 0) isotropic_.push_back(candidates_.size());
            candidates_.push_back(std::move(c));
        }
        stats_.candidates = candidates_.size();
        stats_.isotropic = isotropic_.size();
        stats_.truncated = truncated;
    }

    /// Best pair list found: x indices and matching y indices.
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> run() {
        std::vector<std::size_t> xs;
        std::vector<std::size_t> ys;
        explore(xs, ys);
        return {best_x_, best_y_};
    }

    const SmallVector& coords(std::size_t i) const { return candidates_[i].coords; }

private:
    std::int64_t form(std::size_t x, std::size_t y) const {
        return candidates_[x].coords.dot(candidates_[y].right);
    }

    bool done() const { return genus_ - static_cast<long>(best_x_.size()) <= config_.target_upper_bound; }

    bool out_of_time() {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        if (elapsed.count() > config_.time_budget_seconds) stats_.timed_out = true;
        return stats_.timed_out;
    }

    void explore(std::vector<std::size_t>& xs, std::vector<std::size_t>& ys) {
        ++stats_.nodes;
        if (xs.size() > best_x_.size()) {
            best_x_ = xs;
            best_y_ = ys;
        }
        if (done() || static_cast<long>(xs.size()) >= genus_ || out_of_time()) return;

        std::set<std::size_t> key(xs.begin(), xs.end());
        if (!visited_.insert(std::vector<std::size_t>(key.begin(), key.end())).second) return;

        // y candidates orthogonal (both orders) to every chosen x
        std::vector<std::size_t> free_y;
        for (std::size_t y = 0; y < candidates_.size(); ++y) {
            bool ok = true;
            for (std::size_t x : xs)
                if (form(x, y) != 0 || form(y, x) != 0) {
                    ok = false;
                    break;
                }
            if (ok) free_y.push_back(y);
        }

        for (std::size_t x : isotropic_) {
            if (key.count(x)) continue;
            bool isotropic = true;
            for (std::size_t prev : xs)
                if (form(x, prev) != 0 || form(prev, x) != 0) {
                    isotropic = false;
                    break;
                }
            if (!isotropic) continue;
            std::optional<std::size_t> partner;
            for (std::size_t y : free_y) {
                if (y == x) continue;
                const std::int64_t xy = form(x, y);
                const std::int64_t yx = form(y, x);
                if ((xy == 0 && (yx == 1 || yx == -1)) || (yx == 0 && (xy == 1 || xy == -1))) {
                    partner = y;
                    break;
                }
            }
            if (!partner) continue;
            xs.push_back(x);
            ys.push_back(*partner);
            explore(xs, ys);
            xs.pop_back();
            ys.pop_back();
            if (done() || stats_.timed_out) return;
        }
    }

    long genus_;
    const SearchConfig& config_;
    SearchStats& stats_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Candidate> candidates_;
    std::vector<std::size_t> isotropic_;
    std::set<std::vector<std::size_t>> visited_;
    std::vector<std::size_t> best_x_;
    std::vector<std::size_t> best_y_;

};

}  // namespace

DefectCertificate search_defect(const IntMatrix& seifert, long genus, const SearchConfig& config, SearchStats* stats) {
    if (seifert.rows() != seifert.cols()) throw std::invalid_argument("search_defect: Seifert matrix is not square");
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    st = SearchStats{};
    const Eigen::Index n = seifert.rows();

    auto empty = [&] {
        auto cert = verify_alex_trivial(seifert, SubgroupBasis{IntMatrix(0, n)}, genus);
        cert->source = "search";
        return *cert;
    };
    if (n == 0 || config.coeff_bound < 1) return empty();

    // The search runs on machine integers; keep entries small enough that
    // every bilinear value fits comfortably.
    constexpr long kEntryLimit = 1L << 20;
    SmallMatrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (abs(seifert(i, j)) > kEntryLimit) return empty();
            a(i, j) = seifert(i, j).get_si();
        }

    DefectSearch search(a, genus, config, st);
    const auto [xs, ys] = search.run();
    if (xs.empty()) return empty();

    SubgroupBasis v{IntMatrix(static_cast<Eigen::Index>(2 * xs.size()), n)};
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (Eigen::Index c = 0; c < n; ++c) {
            v.vectors(static_cast<Eigen::Index>(i), c) = static_cast<long>(search.coords(xs[i])(c));
            v.vectors(static_cast<Eigen::Index>(xs.size() + i), c) =
                static_cast<long>(search.coords(ys[i])(c));
        }
    auto cert = verify_alex_trivial(seifert, v, genus);
    if (!cert) throw InvariantViolation("search_defect: assembled sublattice failed exact verification");
    cert->source = "search";
    return *cert;
}

BoundsReport g4_bounds(const SeifertData& data, const SearchConfig& config,
                       const std::optional<SubgroupBasis>& known_subgroup) {
    BoundsReport report;
    report.invariants = compute_invariants(data);
    const long g = report.invariants.genus;
    report.g4top_lower = std::abs(report.invariants.signature) / 2;
    report.g4top_upper = g;

    if (known_subgroup) {
        auto cert = verify_alex_trivial(data.matrix, *known_subgroup, g);
        if (!cert) throw InvariantViolation("supplied sublattice is not Alexander-trivial");
        cert->source = "snail_subgroup";
        report.g4top_upper = std::min(report.g4top_upper, cert->upper_bound);
        report.certificates.push_back(std::move(*cert));
    }
    if (report.g4top_upper > report.g4top_lower) {
        SearchConfig cfg = config;
        cfg.target_upper_bound = std::max(cfg.target_upper_bound, report.g4top_lower);
        DefectCertificate cert = search_defect(data.matrix, g, cfg);
        if (cert.upper_bound < report.g4top_upper) {
            report.g4top_upper = cert.upper_bound;
            report.certificates.push_back(std::move(cert));
        }
    }
    if (report.g4top_upper < report.g4top_lower)
        throw InvariantViolation("four-genus bounds cross: lower " + std::to_string(report.g4top_lower) + " > upper " +
                                 std::to_string(report.g4top_upper));
    report.exact = report.g4top_lower == report.g4top_upper;
    return report;
}

}  // namespace divknot
