#include "stressforge/strata.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "stressforge/lambda4.hpp"
#include "stressforge/lambda5.hpp"
#include "stressforge/projective.hpp"

namespace stressforge {

namespace {

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> assign(n, 0);
    std::function<void(int, int)> rec = [&](int i, int maxb) {
        if (i == n) {
            std::vector<std::vector<int>> blocks(maxb);
            for (int k = 0; k < n; ++k) blocks[assign[k]].push_back(k + 1);
            out.push_back(std::move(blocks));
            return;
        }
        for (int b = 0; b <= maxb; ++b) {
            assign[i] = b;
            rec(i + 1, std::max(maxb, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

struct Descriptor {
    std::vector<std::vector<int>> blocks;   // coincidence partition of 1..n
    std::vector<std::vector<int>> lines;    // sets of block indices, |.| >= 3
    int codim = 0;

    int effective() const { return static_cast<int>(blocks.size()); }
};

std::string type_key(const Descriptor& d) {
    std::vector<int> coincidences;
    for (const auto& b : d.blocks)
        if (b.size() > 1) coincidences.push_back(static_cast<int>(b.size()));
    std::sort(coincidences.rbegin(), coincidences.rend());
    std::vector<int> line_sizes;
    for (const auto& line : d.lines) {
        int originals = 0;
        for (int bi : line) originals += static_cast<int>(d.blocks[bi].size());
        line_sizes.push_back(originals);
    }
    std::sort(line_sizes.rbegin(), line_sizes.rend());
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    return "c[" + join(coincidences) + "];l[" + join(line_sizes) + "]";
}

std::string label_of(const Descriptor& d, int n) {
    static const char* const numerals[] = {"zero", "one",  "two", "three",
                                           "four", "five", "six"};
    std::vector<int> coincidences;
    for (const auto& b : d.blocks)
        if (b.size() > 1) coincidences.push_back(static_cast<int>(b.size()));
    std::sort(coincidences.rbegin(), coincidences.rend());

    std::string s;
    if (d.lines.empty() && coincidences.empty()) return "general position";
    if (!d.lines.empty()) {
        std::vector<int> sizes;
        for (const auto& line : d.lines) {
            int originals = 0;
            for (int bi : line) originals += static_cast<int>(d.blocks[bi].size());
            sizes.push_back(originals);
        }
        std::sort(sizes.rbegin(), sizes.rend());
        if (sizes.size() == 2) s = "twice three points in a line";
        else s = std::string(numerals[sizes[0]]) + " points in a line";
    }
    if (!coincidences.empty()) {
        std::string c;
        if (coincidences.size() == 1 && coincidences[0] == 2) c = "one double point";
        else if (coincidences.size() == 1 && coincidences[0] == 3) c = "one triple point";
        else if (coincidences.size() == 1 && coincidences[0] == static_cast<int>(n))
            c = "all points coincide";
        else if (coincidences.size() == 1)
            c = "one point of multiplicity " + std::string(numerals[coincidences[0]]);
        else if (coincidences.size() == 2 && coincidences[0] == 2 && coincidences[1] == 2)
            c = "two double points";
        else
            c = "a triple point and a double point";
        s = s.empty() ? c : s + " and " + c;
    }
    return s;
}

/// Connected components of the descriptor's reduced parameter space.
long multiplicity(const Descriptor& d) {
    const int e = d.effective();
    if (d.lines.empty()) {
        if (e <= 2) return 1;
        if (e == 3) return 2; // triangle orientations
        if (e == 4) return lambda4_arrangement().merged_face_count;
        throw Error(ErrorKind::UnsupportedN, "no reduced arrangement for 5 generic points");
    }
    if (d.lines.size() == 1) {
        const int t = static_cast<int>(d.lines[0].size());
        const int r = e - t;
        if (r == 0) return factorial(t) / 2; // orderings up to reversal
        if (r == 1) return factorial(t);     // orderings (directed) x side / flip
        throw Error(ErrorKind::UnsupportedN, "two free points off a line need the census");
    }
    // Two crossing lines with three effective points each sharing one:
    // directed classes of two marked points against the shared point on each
    // axis, modulo the simultaneous half-turn.
    std::set<std::array<int, 3>> axis_classes; // (sgn a1, sgn a2, order flag)
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1})
            for (int ord : {0, 1}) {
                if (s1 != s2 && ord == 1) continue; // order only matters same side
                axis_classes.insert({s1, s2, ord});
            }
    std::set<std::array<int, 6>> classes;
    for (const auto& a : axis_classes)
        for (const auto& b : axis_classes) {
            std::array<int, 6> cfg = {a[0], a[1], a[2], b[0], b[1], b[2]};
            std::array<int, 6> flipped = {-a[0], -a[1], a[2], -b[0], -b[1], b[2]};
            classes.insert(std::min(cfg, flipped));
        }
    return static_cast<long>(classes.size()); // 18
}

/// Exact degeneracy pattern of a configuration: coincidence partition plus
/// maximal collinear sets of effective points.
struct Pattern {
    std::vector<std::vector<int>> blocks;
    std::vector<std::set<int>> lines; // block-index sets

    bool operator==(const Pattern& o) const {
        if (blocks != o.blocks) return false;
        std::set<std::set<int>> a(lines.begin(), lines.end());
        std::set<std::set<int>> b(o.lines.begin(), o.lines.end());
        return a == b;
    }
};

Pattern pattern_of(const Configuration& cfg) {
    Pattern p;
    const int n = cfg.size();
    std::vector<int> block_of(n + 1, -1);
    for (int i = 1; i <= n; ++i) {
        if (block_of[i] >= 0) continue;
        int bi = static_cast<int>(p.blocks.size());
        p.blocks.push_back({i});
        block_of[i] = bi;
        for (int j = i + 1; j <= n; ++j)
            if (block_of[j] < 0 && cfg.at(i) == cfg.at(j)) {
                p.blocks[bi].push_back(j);
                block_of[j] = bi;
            }
    }
    const int e = static_cast<int>(p.blocks.size());
    std::vector<Point> reps;
    for (const auto& b : p.blocks) reps.push_back(cfg.at(b[0]));
    std::set<std::set<int>> lines;
    for (int i = 0; i < e; ++i)
        for (int j = i + 1; j < e; ++j) {
            std::set<int> on = {i, j};
            for (int k = 0; k < e; ++k) {
                if (k == i || k == j) continue;
                if (collinear(reps[i], reps[j], reps[k])) on.insert(k);
            }
            if (on.size() >= 3) lines.insert(on);
        }
    // Keep only maximal collinear sets.
    for (const auto& l : lines) {
        bool maximal = true;
        for (const auto& o : lines)
            if (l != o && std::includes(o.begin(), o.end(), l.begin(), l.end())) maximal = false;
        if (maximal) p.lines.push_back(l);
    }
    return p;
}

/// Exact sample construction for a descriptor, with deterministic retry.
Configuration realize_descriptor(const Descriptor& d, int n) {
    const int e = d.effective();
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Point> reps(e);
        std::vector<bool> placed(e, false);
        const Rational off(attempt + 1, attempt + 2);

        if (!d.lines.empty()) {
            // First line along the x axis.
            int k = 0;
            for (int bi : d.lines[0]) {
                reps[bi] = {Rational(k + 1) + (k == 0 ? off : Rational(0)), Rational(0)};
                placed[bi] = true;
                ++k;
            }
            if (d.lines.size() == 2) {
                int shared = -1;
                for (int bi : d.lines[1])
                    if (placed[bi]) shared = bi;
                reps[shared] = {Rational(0), Rational(0)};
                int j = 0;
                for (int bi : d.lines[1]) {
                    if (bi == shared) continue;
                    reps[bi] = {Rational(0), Rational(j + 1) + (j == 0 ? off : Rational(0))};
                    placed[bi] = true;
                    ++j;
                }
            }
        }
        // Free blocks go on a parabola: no three of them can be collinear,
        // and they never meet the axis-aligned forced lines.
        int k = 0;
        for (int bi = 0; bi < e; ++bi) {
            if (placed[bi]) continue;
            Rational t = Rational(3 * k + 2) + off;
            reps[bi] = {t, t * t + Rational(1)};
            ++k;
        }

        std::vector<Point> pts(n);
        for (int bi = 0; bi < e; ++bi)
            for (int lbl : d.blocks[bi]) pts[lbl - 1] = reps[bi];
        Configuration cfg(2, pts);

        Pattern want;
        want.blocks = d.blocks;
        for (const auto& l : d.lines) want.lines.emplace_back(l.begin(), l.end());
        if (pattern_of(cfg) == want) return cfg;
    }
    throw Error(ErrorKind::DegeneratePosition, "descriptor sample construction failed");
}

} // namespace

CensusReport strata_table(int n) {
    if (n < 2 || n > 5)
        throw Error(ErrorKind::UnsupportedN, "census supports n = 2..5");

    CensusReport report;
    report.n = n;
    std::map<std::pair<int, std::string>, std::pair<std::string, long>> bullets;

    for (const auto& blocks : set_partitions(n)) {
        Descriptor base;
        base.blocks = blocks;
        const int e = base.effective();

        std::vector<std::vector<std::vector<int>>> line_choices;
        line_choices.push_back({}); // no forced line
        for (int mask = 0; mask < (1 << e); ++mask) {
            std::vector<int> s;
            for (int bi = 0; bi < e; ++bi)
                if (mask & (1 << bi)) s.push_back(bi);
            if (s.size() >= 3) line_choices.push_back({s});
        }
        if (e == 5) {
            // Two crossing collinear triples sharing exactly one point.
            for (int m1 = 0; m1 < (1 << e); ++m1) {
                for (int m2 = m1 + 1; m2 < (1 << e); ++m2) {
                    if (__builtin_popcount(m1) != 3 || __builtin_popcount(m2) != 3) continue;
                    if (__builtin_popcount(m1 & m2) != 1) continue;
                    std::vector<int> s1, s2;
                    for (int bi = 0; bi < e; ++bi) {
                        if (m1 & (1 << bi)) s1.push_back(bi);
                        if (m2 & (1 << bi)) s2.push_back(bi);
                    }
                    line_choices.push_back({s1, s2});
                }
            }
        }

        for (const auto& lines : line_choices) {
            Descriptor d = base;
            d.lines = lines;
            d.codim = 0;
            for (const auto& b : d.blocks) d.codim += 2 * (static_cast<int>(b.size()) - 1);
            for (const auto& l : d.lines) d.codim += static_cast<int>(l.size()) - 2;
            if (n == 5 && d.codim <= 1) continue; // rows covered by the Lambda5 census
            if (2 * n - d.codim < 0) continue;

            realize_descriptor(d, n); // realizability gate
            const long mult = multiplicity(d);
            const int dim = 2 * n - d.codim;
            report.table.by_dimension[dim] += mult;
            auto key = std::make_pair(dim, type_key(d));
            auto& bucket = bullets[key];
            bucket.first = label_of(d, n);
            bucket.second += mult;
        }
    }

    if (n == 5) {
        const Lambda5Census& census = lambda5_census();
        report.table.by_dimension[10] = census.top_count;
        report.table.by_dimension[9] = census.codim1_count;
        bullets[{10, "c[];l[]"}] = {"general position", census.top_count};
        bullets[{9, "c[];l[3]"}] = {"three points in a line", census.codim1_count};
    }

    for (const auto& [key, val] : bullets)
        report.bullets.push_back({key.first, key.second, val.first, val.second});
    std::sort(report.bullets.begin(), report.bullets.end(), [](const auto& a, const auto& b) {
        return a.dimension != b.dimension ? a.dimension > b.dimension
                                          : a.type_key < b.type_key;
    });
    return report;
}

} // namespace stressforge
