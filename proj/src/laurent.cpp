#include "pspan/laurent.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pspan {

namespace {

void collapse(std::vector<Exponents>& v) {
    std::sort(v.begin(), v.end());
    std::vector<Exponents> out;
    out.reserve(v.size());
    for (std::size_t p = 0; p < v.size();) {
        std::size_t q = p;
        while (q < v.size() && v[q] == v[p])
            ++q;
        if ((q - p) & 1)
            out.push_back(v[p]);
        p = q;
    }
    v.swap(out);
}

} // namespace

LaurentPoly::LaurentPoly(std::vector<Exponents> terms) : terms_(std::move(terms)) {
    collapse(terms_);
}

LaurentPoly LaurentPoly::monomial(const Exponents& e) {
    LaurentPoly p;
    p.terms_.push_back(e);
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    std::vector<Exponents> all;
    all.reserve(terms_.size() + o.terms_.size());
    all.insert(all.end(), terms_.begin(), terms_.end());
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    collapse(all);
    LaurentPoly p;
    p.terms_ = std::move(all);
    return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    std::vector<Exponents> all;
    all.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            all.push_back(a + b);
    collapse(all);
    LaurentPoly p;
    p.terms_ = std::move(all);
    return p;
}

std::string LaurentPoly::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first)
            out += " + ";
        first = false;
        if (t == Exponents{0, 0, 0}) {
            out += "1";
            continue;
        }
        bool space = false;
        auto var = [&](const char* name, std::int32_t e) {
            if (e == 0)
                return;
            if (space)
                out += " ";
            out += name;
            if (e != 1)
                out += "^" + std::to_string(e);
            space = true;
        };
        var("z1", t.e1);
        var("z2", t.e2);
        var("z3", t.e3);
    }
    return out;
}

RationalFn::RationalFn(LaurentPoly n, LaurentPoly d)
    : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero())
        throw std::invalid_argument("RationalFn: zero denominator");
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    return {num * o.den + o.num * den, den * o.den};
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    return {num * o.num, den * o.den};
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
    if (o.num.is_zero())
        throw std::invalid_argument("RationalFn: division by zero");
    return {num * o.den, den * o.num};
}

bool rational_eq(const RationalFn& a, const RationalFn& b) {
    return a.num * b.den == b.num * a.den;
}

Vec3 cramer3(const Mat3& a, const Vec3& rhs) {
    auto det2 = [](const RationalFn& p, const RationalFn& q, const RationalFn& r,
                   const RationalFn& s) { return p * s + q * r; }; // GF(2): minus = plus
    auto det3 = [&](const Mat3& m) {
        RationalFn d = m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]);
        d = d + m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]);
        d = d + m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
        return d;
    };
    RationalFn det = det3(a);
    if (det.is_zero())
        throw SingularSystem("cramer3: zero determinant");
    Vec3 out;
    for (int col = 0; col < 3; ++col) {
        Mat3 m = a;
        for (int row = 0; row < 3; ++row)
            m[row][col] = rhs[row];
        out[col] = det3(m) / det;
    }
    return out;
}

namespace {

RationalFn rmono(std::int32_t e1, std::int32_t e2, std::int32_t e3) {
    return RationalFn::from_poly(LaurentPoly::monomial({e1, e2, e3}));
}

} // namespace

Vec3 f_series() {
    const RationalFn one = RationalFn::from_poly(LaurentPoly::one());
    Mat3 a{{{one, rmono(-1, 0, 0), rmono(-3, 0, 0)},
            {rmono(0, 1, 0), one, rmono(0, -2, 0)},
            {rmono(0, 0, 3), rmono(0, 0, 2), one}}};
    Vec3 rhs{rmono(-7, 0, 0), rmono(0, -6, 0), rmono(0, 0, -4)};
    Vec3 f = cramer3(a, rhs);
    // the defining equations must hold; anything else is a fatal bug
    for (int row = 0; row < 3; ++row) {
        RationalFn lhs = a[row][0] * f[0] + a[row][1] * f[1] + a[row][2] * f[2];
        if (!rational_eq(lhs, rhs[row]))
            throw std::logic_error("f_series: solution fails its defining system");
    }
    return f;
}

LaurentPoly f0_closed_form() {
    std::vector<Exponents> terms;
    const std::int32_t e[3] = {-1, -2, -4};
    constexpr int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& p : perm)
        terms.push_back({e[p[0]], e[p[1]], e[p[2]]});
    return LaurentPoly(std::move(terms));
}

std::int64_t measure(const MixedMonomial& m) {
    return 3ll * m.z.e1 + m.z.e2 - 2 * (m.vIndex == 0 ? 1 : 0) +
           (m.vIndex == 2 ? 1 : 0);
}

std::array<MixedMonomial, 3> rewrite_step(const MixedMonomial& m) {
    switch (m.vIndex) {
    case 0: // v0 = v1 z1^-1 + v2 z1^-3 + v3 z1^-7
        return {MixedMonomial{1, m.z + Exponents{-1, 0, 0}},
                MixedMonomial{2, m.z + Exponents{-3, 0, 0}},
                MixedMonomial{3, m.z + Exponents{-7, 0, 0}}};
    case 1: // v1 = v0 z2 + v2 z2^-2 + v3 z2^-6
        return {MixedMonomial{0, m.z + Exponents{0, 1, 0}},
                MixedMonomial{2, m.z + Exponents{0, -2, 0}},
                MixedMonomial{3, m.z + Exponents{0, -6, 0}}};
    case 2: // v2 = v0 z3^3 + v1 z3^2 + v3 z3^-4
        return {MixedMonomial{0, m.z + Exponents{0, 0, 3}},
                MixedMonomial{1, m.z + Exponents{0, 0, 2}},
                MixedMonomial{3, m.z + Exponents{0, 0, -4}}};
    default:
        throw std::invalid_argument("rewrite_step: vIndex must be 0, 1 or 2");
    }
}

LaurentPoly rewrite_iterative(int target, std::int64_t cutoffMeasure) {
    if (target < 0 || target > 2)
        throw std::invalid_argument("rewrite_iterative: target must be 0, 1 or 2");

    // Frontier bucketed by measure, processed in strictly decreasing order;
    // children always land in strictly smaller buckets, so each bucket's
    // parity is settled when popped.
    std::map<std::int64_t, std::set<MixedMonomial>, std::greater<>> frontier;
    std::set<Exponents> acc; // v3-coefficient, GF(2)

    auto push = [&](const MixedMonomial& m) {
        if (m.vIndex == 3) {
            auto [it, inserted] = acc.insert(m.z);
            if (!inserted)
                acc.erase(it);
            return;
        }
        std::int64_t mu = measure(m);
        if (mu < cutoffMeasure)
            return; // below the work frontier
        auto& bucket = frontier[mu];
        auto [it, inserted] = bucket.insert(m);
        if (!inserted)
            bucket.erase(it);
    };

    push({target, {0, 0, 0}});
    while (!frontier.empty()) {
        auto node = frontier.extract(frontier.begin());
        for (const auto& m : node.mapped())
            for (const auto& child : rewrite_step(m))
                push(child);
    }

    // A v3-monomial is stable once nothing at or above the cutoff can
    // regenerate it: the cheapest parent of v3 z^E has measure mu(E) + 1.
    std::vector<Exponents> stable;
    for (const auto& e : acc)
        if (3ll * e.e1 + e.e2 >= cutoffMeasure - 1)
            stable.push_back(e);
    if (stable.empty())
        throw CutoffTooSmall("rewrite_iterative: no monomial is stable at this cutoff");
    return LaurentPoly(std::move(stable));
}

} // namespace pspan
