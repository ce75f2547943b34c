#include "codetops/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "codetops/fixtures.hpp"
#include "codetops/matrix_io.hpp"
#include "codetops/oracle.hpp"

namespace codetops {

namespace {

/// Collects requirements for one check; the first failure wins.
class Checker {
public:
    explicit Checker(std::string name) : name_(std::move(name)) {}

    template <typename A, typename B>
    void equal(const A& got, const B& want, const std::string& what) {
        if (failed_ || got == want) return;
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want;
        fail(os.str());
    }

    void require(bool ok, const std::string& what) {
        if (!failed_ && !ok) fail(what);
    }

    void fail(const std::string& what) {
        failed_ = true;
        detail_ = what;
    }

    CheckResult result() const { return {name_, !failed_, detail_}; }

private:
    std::string name_;
    bool failed_ = false;
    std::string detail_;
};

std::vector<Subspace> sorted(std::vector<Subspace> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool same_set(const std::vector<Subspace>& a, const std::vector<Subspace>& b) {
    return sorted(a) == sorted(b);
}

uint64_t draw(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

/// Random full-row-rank generator matrix; entries uniform, redrawn until
/// the rank condition holds.
MatrixGF random_generator(std::mt19937_64& rng, const FieldPtr& field,
                          size_t rows, size_t cols) {
    while (true) {
        MatrixGF m(field, rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c)
                m.set(r, c, static_cast<uint32_t>(draw(rng, field->q())));
        if (m.rref().rank == rows) return m;
    }
}

bool has_zero_column(const MatrixGF& m) {
    for (size_t c = 0; c < m.cols(); ++c) {
        bool zero = true;
        for (size_t r = 0; r < m.rows() && zero; ++r)
            if (m.at(r, c) != 0) zero = false;
        if (zero) return true;
    }
    return false;
}

// ---- worked-example checks -------------------------------------------

CheckResult check_single_point_code() {
    Checker c("single-point-code");
    MatrixGF m = fixtures::single_point_code();
    TopAnalysis a = analyze(m);
    c.equal(a.classes->count(), size_t{12}, "column class count");
    for (const auto& cls : a.classes->classes)
        c.equal(cls.size(), size_t{1}, "column class size");
    c.equal(a.w_span.dim(), size_t{1}, "dim W");
    c.equal(a.wprime.size(), size_t{1}, "uncovered point count");
    c.require(a.wprime.size() == 1 &&
                  a.wprime[0] == fixtures::single_point_uncovered(),
              "uncovered point is (1,2,2)");
    c.equal(a.members.size(), size_t{1}, "member count");
    c.require(a.members.size() == 1 &&
                  a.members[0] == fixtures::single_point_member(),
              "member equals the pinned 2x12 row space");
    c.equal(to_string(a.classification), std::string("SinglePoint"),
            "classification");
    c.require(a.line_count && *a.line_count == BigInt(118096),
              "line count through the member");
    return c.result();
}

CheckResult check_line_code() {
    Checker c("full-line-code");
    MatrixGF m = fixtures::line_code();
    TopAnalysis a = analyze(m);
    c.equal(a.n, size_t{360}, "column count");
    c.equal(a.classes->count(), size_t{360}, "column class count");
    c.equal(a.w_span.dim(), size_t{2}, "dim W");
    c.require(a.w_perp == fixtures::line_code_perp(),
              "orthogonal complement equals the pinned 4-vector span");
    c.require(a.common && *a.common == fixtures::line_code_common(m),
              "member intersection equals the pinned 4-dim span");
    c.equal(a.members.size(), size_t{4}, "member count");
    c.require(same_set(a.members, fixtures::line_code_members()),
              "members equal the four pinned spans");
    c.equal(to_string(a.classification), std::string("LineContained"),
            "classification");
    if (a.line_pair) {
        std::vector<Subspace> ln = line(a.line_pair->first, a.line_pair->second);
        c.require(same_set(ln, a.members),
                  "the containing line consists exactly of the members");
    } else {
        c.fail("missing containing line");
    }
    return c.result();
}

CheckResult check_maximal_top_code() {
    Checker c("maximal-top-code");
    MatrixGF m = fixtures::maximal_top_code();
    TopAnalysis a = analyze(m);
    c.equal(a.n, size_t{58}, "column count");
    c.equal(a.w_span.dim(), size_t{3}, "dim W");
    c.equal(to_string(a.classification), std::string("MaximalTop"),
            "classification");
    c.equal(a.members.size(), size_t{5}, "member count");
    c.require(same_set(a.members, fixtures::maximal_top_members()),
              "members equal the five pinned spans");
    c.require(a.w_perp == fixtures::maximal_top_perp(),
              "orthogonal complement equals the pinned 3-vector span");
    c.require(a.common && a.common->dim() == 3,
              "member intersection has dimension 3");
    c.require(a.common && *a.common == fixtures::maximal_top_common(m),
              "member intersection equals the pinned span");
    return c.result();
}

CheckResult check_five_column_code() {
    Checker c("five-column-stabilizer");
    for (uint64_t q : {uint64_t{3}, uint64_t{5}}) {
        FieldPtr f = Field::make(q);
        MatrixGF m = fixtures::five_column_code(f);
        Subspace u = Subspace::from_span(m);
        std::vector<MonomialMap> st = stabilizer(u);
        c.equal(st.size(), size_t{8 * (q - 1)},
                "stabilizer order at q=" + std::to_string(q));
        c.require(st == fixtures::five_column_stabilizer(f),
                  "stabilizer equals the pinned shape table at q=" +
                      std::to_string(q));
        BigInt expected_orbit = BigInt(15) * boost::multiprecision::pow(
                                                 BigInt(q - 1), 4);
        c.require(orbit_size(u) == expected_orbit,
                  "orbit size at q=" + std::to_string(q));
        if (q == 3)
            c.require(st == brute_stabilizer(u),
                      "stabilizer agrees with the exhaustive sweep at q=3");
    }
    return c.result();
}

CheckResult check_paired_columns_code() {
    Checker c("paired-columns-action");
    MatrixGF m = fixtures::paired_columns_code();
    TopAnalysis a = analyze(m);
    c.equal(a.wprime.size(), size_t{4}, "uncovered point count");
    c.equal(a.members.size(), size_t{4}, "member count");

    Subspace u = a.u;
    std::vector<MonomialMap> st = stabilizer(u);
    c.equal(st.size(), size_t{48}, "stabilizer order");
    c.require(orbit_size(u) == BigInt(15), "orbit size");
    c.require(st == brute_stabilizer(u),
              "stabilizer agrees with the exhaustive sweep");

    // The subgroup whose permutation part fixes every column class.
    const ColumnClasses& cls = *a.classes;
    std::vector<MonomialMap> internal;
    for (const MonomialMap& f : st) {
        bool keeps = true;
        for (size_t i = 0; i < f.n() && keeps; ++i)
            if (cls.class_of[f.delta[i]] != cls.class_of[i]) keeps = false;
        if (keeps) internal.push_back(f);
    }
    c.equal(internal.size(), size_t{8}, "class-internal subgroup order");
    for (const MonomialMap& f : internal)
        c.require(acts_identically_on_top(f, u, a.k),
                  "class-internal map fixes every member");

    // Member permutations induced by the stabilizer.
    std::vector<Subspace> members = sorted(a.members);
    std::set<std::vector<size_t>> perms;
    std::vector<size_t> ident(members.size());
    for (size_t i = 0; i < members.size(); ++i) ident[i] = i;
    size_t trivial = 0;
    for (const MonomialMap& f : st) {
        std::vector<size_t> perm(members.size());
        for (size_t i = 0; i < members.size(); ++i) {
            Subspace img = apply(f, members[i]);
            auto it = std::lower_bound(members.begin(), members.end(), img);
            c.require(it != members.end() && *it == img,
                      "stabilizer map permutes the members");
            perm[i] = static_cast<size_t>(it - members.begin());
        }
        if (perm == ident) {
            ++trivial;
            c.require(std::find(internal.begin(), internal.end(), f) !=
                          internal.end(),
                      "only class-internal maps fix every member");
        }
        perms.insert(std::move(perm));
    }
    c.equal(trivial, size_t{8}, "kernel size of the member action");
    c.equal(perms.size(), size_t{6},
            "induced permutation group order (faithful quotient)");
    return c.result();
}

// ---- property suites --------------------------------------------------

struct CensusParams {
    size_t n, k;
    uint64_t q;
};

const std::vector<CensusParams> kCensus = {{4, 2, 2}, {5, 2, 2}, {5, 2, 3}};

CheckResult check_maximality_census() {
    Checker c("maximality-census");
    for (const CensusParams& prm : kCensus) {
        std::string tag = " at (" + std::to_string(prm.n) + "," +
                          std::to_string(prm.k) + "," + std::to_string(prm.q) +
                          ")";
        FieldPtr f = Field::make(prm.q);
        GrassmannGraph g = build_graph(f, prm.n, prm.k, true);
        std::set<std::vector<size_t>> expected;
        for (const Subspace& u :
             enumerate_nondegenerate(f, prm.n, prm.k + 1)) {
            TopAnalysis a = analyze(u, prm.k);
            if (a.members.empty()) {
                c.require(a.classification == Classification::Empty,
                          "empty member set must classify Empty" + tag);
                continue;
            }
            std::vector<size_t> idx;
            for (const Subspace& s : a.members) {
                std::optional<size_t> i = g.index_of(s);
                c.require(i.has_value(), "member missing from graph" + tag);
                if (i) idx.push_back(*i);
            }
            std::sort(idx.begin(), idx.end());
            CliqueReport rep = check_maximal_clique(g, idx);
            c.require(rep.is_clique, "member set must be a clique" + tag);
            bool claimed = a.classification == Classification::MaximalTop;
            c.require(rep.is_maximal == claimed,
                      "classification vs maximal-clique oracle" + tag);
            if (claimed) expected.insert(std::move(idx));
        }
        std::set<std::vector<size_t>> found;
        for (const auto& clique : all_maximal_cliques(g, 1000)) {
            Subspace span = g.vertex(clique[0]);
            for (size_t i = 1; i < clique.size() && span.dim() <= prm.k + 1;
                 ++i)
                span = sum(span, g.vertex(clique[i]));
            if (span.dim() != prm.k + 1) continue;  // star-type clique
            TopAnalysis a = analyze(span, prm.k);
            c.require(a.classification == Classification::MaximalTop,
                      "clique span must classify MaximalTop" + tag);
            std::vector<size_t> idx;
            for (const Subspace& s : a.members) {
                std::optional<size_t> i = g.index_of(s);
                if (i) idx.push_back(*i);
            }
            std::sort(idx.begin(), idx.end());
            c.require(idx == clique,
                      "clique must equal the span's member set" + tag);
            found.insert(idx);
        }
        c.require(found == expected,
                  "clique census equals the analytic census" + tag);
    }
    return c.result();
}

CheckResult check_member_construction_oracle(uint64_t seed) {
    Checker c("member-construction-oracle");
    std::mt19937_64 rng(seed);
    const uint64_t qs[] = {2, 3, 4};
    std::map<uint64_t, FieldPtr> fields;
    for (uint64_t q : qs)
        fields[q] = q == 4 ? Field::make(2, 2) : Field::make(q);

    for (int i = 0; i < 200; ++i) {
        uint64_t q = qs[draw(rng, 3)];
        size_t kp = 3 + static_cast<size_t>(draw(rng, 2));  // dim U
        size_t n = kp + static_cast<size_t>(draw(rng, 9 - kp));
        MatrixGF m = random_generator(rng, fields[q], kp, n);
        Subspace u = Subspace::from_span(m);
        if (!same_set(top_nondegenerate(u, kp - 1),
                      brute_top_members(u, kp - 1))) {
            c.fail("construction/filter mismatch at instance " +
                   std::to_string(i) + " (q=" + std::to_string(q) +
                   ", dims " + std::to_string(kp) + "x" + std::to_string(n) +
                   ")");
            break;
        }
    }

    std::vector<std::pair<std::string, MatrixGF>> pinned;
    pinned.emplace_back("single-point", fixtures::single_point_code());
    pinned.emplace_back("full-line", fixtures::line_code());
    pinned.emplace_back("maximal-top", fixtures::maximal_top_code());
    pinned.emplace_back("five-column",
                        fixtures::five_column_code(Field::make(3)));
    pinned.emplace_back("paired-columns", fixtures::paired_columns_code());
    for (const auto& [name, m] : pinned) {
        Subspace u = Subspace::from_span(m);
        size_t k = m.rows() - 1;
        c.require(same_set(top_nondegenerate(u, k), brute_top_members(u, k)),
                  "construction/filter mismatch on fixture " + name);
    }
    return c.result();
}

CheckResult check_intersection_dimension(uint64_t seed) {
    Checker c("intersection-dimension");
    std::mt19937_64 rng(seed + 1);
    const uint64_t qs[] = {2, 3, 4, 5};
    std::map<uint64_t, FieldPtr> fields;
    for (uint64_t q : qs)
        fields[q] = q == 4 ? Field::make(2, 2) : Field::make(q);

    int accepted = 0;
    while (accepted < 200) {
        uint64_t q = qs[draw(rng, 4)];
        size_t kp = 3 + static_cast<size_t>(draw(rng, 2));
        size_t n = kp + static_cast<size_t>(draw(rng, 10 - kp));
        MatrixGF m = random_generator(rng, fields[q], kp, n);
        if (has_zero_column(m)) continue;
        TopAnalysis a = analyze(m);
        c.equal(a.w_span.dim() + a.w_perp.dim(), kp,
                "dim W + dim W-perp must be " + std::to_string(kp));
        if (a.wprime.empty()) continue;
        ++accepted;
        if (!a.common || a.common->dim() != a.w_perp.dim()) {
            c.fail("intersection dimension != complement dimension at "
                   "instance " +
                   std::to_string(accepted) + " (q=" + std::to_string(q) +
                   ", dims " + std::to_string(kp) + "x" + std::to_string(n) +
                   ")");
            break;
        }
    }
    return c.result();
}

CheckResult check_counting_identities(uint64_t seed) {
    Checker c("counting-identities");

    // Member count |<U]^c_k| = [k+1]_q - s over the census parameters.
    for (const CensusParams& prm : kCensus) {
        FieldPtr f = Field::make(prm.q);
        for (const Subspace& u :
             enumerate_nondegenerate(f, prm.n, prm.k + 1)) {
            TopAnalysis a = analyze(u, prm.k);
            BigInt want = a.top_size() - BigInt(a.classes->count());
            if (BigInt(a.members.size()) != want) {
                c.fail("member count != [k+1]_q - s at (" +
                       std::to_string(prm.n) + "," + std::to_string(prm.k) +
                       "," + std::to_string(prm.q) + ")");
                break;
            }
        }
    }

    // Gaussian binomials against raw enumeration.
    for (uint64_t q : {uint64_t{2}, uint64_t{3}}) {
        FieldPtr f = Field::make(q);
        for (size_t n = 1; n <= 5; ++n) {
            Subspace full = Subspace::full(f, n);
            for (size_t k = 0; k <= n; ++k)
                c.equal(BigInt(enumerate_subspaces(full, k).size()),
                        gaussian_binomial(n, k, q),
                        "subspace census at n=" + std::to_string(n) +
                            " k=" + std::to_string(k) +
                            " q=" + std::to_string(q));
        }
    }

    // Matrix-automorphism and same-class-matrix counts against sweeps.
    std::vector<MatrixGF> repeated;
    repeated.push_back(
        MatrixGF::from_rows(Field::make(2), {{1, 0, 1, 1}, {0, 1, 0, 0}}));
    repeated.push_back(
        MatrixGF::from_rows(Field::make(3), {{1, 0, 1, 2}, {0, 1, 0, 0}}));
    repeated.push_back(fixtures::five_column_code(Field::make(3)));
    repeated.push_back(MatrixGF::from_rows(
        Field::make(2), {{1, 1, 0, 0, 1}, {0, 0, 1, 1, 0}}));
    repeated.push_back(fixtures::paired_columns_code());
    repeated.push_back(MatrixGF::from_rows(Field::make(3),
                                           {{1, 1, 0, 0, 0, 0},
                                            {0, 0, 1, 2, 0, 0},
                                            {0, 0, 0, 0, 1, 1}}));
    for (const MatrixGF& m : repeated) {
        MatrixCounts counts = remark_counts(m);
        uint64_t fixing = 0;
        std::set<std::string> images;
        for (const MonomialMap& f :
             all_monomial_maps(m.field(), m.cols())) {
            MatrixGF img = apply(f, m);
            if (img == m) ++fixing;
            images.insert(serialize_matrix(img));
        }
        std::string tag = " for " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + " over " +
                          m.field()->describe();
        c.equal(BigInt(fixing), counts.matrix_automorphisms,
                "matrix-fixing map count" + tag);
        c.equal(BigInt(images.size()), counts.same_class_matrices,
                "same-class matrix count" + tag);
    }

    // Whenever [k+1]_q > n+q+1 every sampled classification is MaximalTop.
    std::mt19937_64 rng(seed + 2);
    struct Forced {
        size_t n, kp;
        uint64_t q;
    };
    for (const Forced& prm :
         {Forced{8, 4, 2}, Forced{11, 4, 2}, Forced{10, 4, 3}}) {
        FieldPtr f = Field::make(prm.q);
        c.require(corollary_check(prm.n, prm.kp - 1, *f),
                  "count bound must hold at n=" + std::to_string(prm.n));
        for (int i = 0; i < 10; ++i) {
            MatrixGF m = random_generator(rng, f, prm.kp, prm.n);
            if (has_zero_column(m)) {
                --i;
                continue;
            }
            TopAnalysis a = analyze(m);
            c.require(a.classification == Classification::MaximalTop,
                      "forced MaximalTop at n=" + std::to_string(prm.n) +
                          " q=" + std::to_string(prm.q));
        }
    }
    c.require(!corollary_check(12, 3, *Field::make(2)),
              "count bound must fail at n=12 q=2 dim=4");
    return c.result();
}

CheckResult check_group_action(uint64_t seed) {
    Checker c("group-action");
    std::mt19937_64 rng(seed + 3);

    // Stabilizer search vs exhaustive sweep; orbit-stabilizer identity.
    std::vector<MatrixGF> cases;
    cases.push_back(fixtures::paired_columns_code());
    cases.push_back(fixtures::five_column_code(Field::make(3)));
    for (auto [n, q] : std::vector<std::pair<size_t, uint64_t>>{
             {4, 2}, {5, 2}, {6, 2}, {4, 3}, {5, 3}, {6, 3}}) {
        FieldPtr f = Field::make(q);
        MatrixGF m = random_generator(rng, f, 3, n);
        if (has_zero_column(m)) continue;
        cases.push_back(std::move(m));
    }
    for (const MatrixGF& m : cases) {
        Subspace u = Subspace::from_span(m);
        std::vector<MonomialMap> fast = stabilizer(u);
        std::vector<MonomialMap> slow = brute_stabilizer(u);
        std::string tag = " for " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + " over " +
                          m.field()->describe();
        c.require(fast == slow, "stabilizer mismatch" + tag);
        c.require(orbit_size(u) * BigInt(fast.size()) ==
                      group_order(m.cols(), *m.field(), false),
                  "orbit-stabilizer identity" + tag);
    }

    // Canonical label equality <=> joint orbit, exhaustively.
    for (uint64_t q : {uint64_t{2}, uint64_t{3}}) {
        FieldPtr f = Field::make(q);
        std::vector<Subspace> codes = enumerate_nondegenerate(f, 4, 2);
        std::vector<MonomialMap> maps = all_monomial_maps(f, 4);
        std::vector<Subspace> orbit_key;
        std::vector<OrbitLabel> labels;
        for (const Subspace& u : codes) {
            Subspace best = apply(maps[0], u);
            for (const MonomialMap& g : maps) {
                Subspace img = apply(g, u);
                if (img < best) best = img;
            }
            orbit_key.push_back(std::move(best));
            labels.push_back(orbit_canonical_form(u.basis()));
        }
        for (size_t i = 0; i < codes.size(); ++i)
            for (size_t j = i + 1; j < codes.size(); ++j)
                if ((orbit_key[i] == orbit_key[j]) !=
                    (labels[i] == labels[j])) {
                    c.fail("label/orbit disagreement at q=" +
                           std::to_string(q) + " pair (" + std::to_string(i) +
                           "," + std::to_string(j) + ")");
                    break;
                }
    }

    // Exhaustive map generation count at n=4, q=3.
    std::vector<MonomialMap> maps = all_monomial_maps(Field::make(3), 4);
    c.equal(BigInt(maps.size()), group_order(4, *Field::make(3), false),
            "monomial map census at n=4 q=3");
    c.require(std::adjacent_find(maps.begin(), maps.end()) == maps.end(),
              "monomial map sweep must not repeat maps");
    return c.result();
}

}  // namespace

std::vector<CheckResult> paper_example_checks() {
    return {check_single_point_code(), check_line_code(),
            check_maximal_top_code(), check_five_column_code(),
            check_paired_columns_code()};
}

std::vector<CheckResult> property_checks(uint64_t seed) {
    return {check_maximality_census(), check_member_construction_oracle(seed),
            check_intersection_dimension(seed), check_counting_identities(seed),
            check_group_action(seed)};
}

}  // namespace codetops
