#include <rsumset/polynomial.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace rsumset {

namespace {

void require_same(const Prime& a, const Prime& b) {
    if (!(a == b))
        throw Error(ErrorCode::ModulusMismatch,
                    "polynomials over Z/" + std::to_string(a.value()) + " and Z/" + std::to_string(b.value()));
}

} // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(Prime modulus, std::vector<i64> coeffs) : modulus_(std::move(modulus)) {
    coeffs_.reserve(coeffs.size());
    for (i64 c : coeffs) coeffs_.push_back(reduce(c, modulus_.value()));
    trim();
}

void UniPoly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

u32 UniPoly::evaluate(u32 z) const noexcept {
    const u32 p = modulus_.value();
    u32 acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = add_mod(mul_mod(acc, z, p), *it, p);
    return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    require_same(a.modulus_, b.modulus_);
    UniPoly r(a.modulus_);
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = add_mod(a.coeff(i), b.coeff(i), a.modulus_);
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    require_same(a.modulus_, b.modulus_);
    UniPoly r(a.modulus_);
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = sub_mod(a.coeff(i), b.coeff(i), a.modulus_);
    r.trim();
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    require_same(a.modulus_, b.modulus_);
    UniPoly r(a.modulus_);
    if (a.is_zero() || b.is_zero()) return r;
    const u32 p = a.modulus_.value();
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] = add_mod(r.coeffs_[i + j], mul_mod(a.coeffs_[i], b.coeffs_[j], p), p);
    r.trim();
    return r;
}

// ----------------------------------------------------------------- BiPoly

BiPoly BiPoly::monomial(const Prime& p, std::size_t i, std::size_t j, i64 c) {
    BiPoly f(p);
    f.set(i, j, c);
    return f;
}

BiPoly BiPoly::in_x(const UniPoly& q) {
    BiPoly f(q.modulus());
    for (std::size_t i = 0; i < q.coeffs().size(); ++i) f.add_to(i, 0, q.coeffs()[i]);
    return f;
}

BiPoly BiPoly::in_y(const UniPoly& q) {
    BiPoly f(q.modulus());
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) f.add_to(0, j, q.coeffs()[j]);
    return f;
}

void BiPoly::resize(std::size_t nx, std::size_t ny) {
    if (nx == nx_ && ny == ny_) return;
    std::vector<u32> next(nx * ny, 0);
    for (std::size_t i = 0; i < std::min(nx, nx_); ++i)
        for (std::size_t j = 0; j < std::min(ny, ny_); ++j) next[i * ny + j] = data_[i * ny_ + j];
    data_ = std::move(next);
    nx_ = nx;
    ny_ = ny;
}

void BiPoly::trim() {
    std::size_t nx = 0, ny = 0;
    for (std::size_t i = 0; i < nx_; ++i)
        for (std::size_t j = 0; j < ny_; ++j)
            if (data_[i * ny_ + j] != 0) {
                nx = std::max(nx, i + 1);
                ny = std::max(ny, j + 1);
            }
    resize(nx, ny);
}

void BiPoly::set(std::size_t i, std::size_t j, i64 value) {
    const u32 v = reduce(value, modulus_.value());
    if (i >= nx_ || j >= ny_) {
        if (v == 0) return;
        resize(std::max(nx_, i + 1), std::max(ny_, j + 1));
    }
    data_[i * ny_ + j] = v;
    if (v == 0) trim();
}

void BiPoly::add_to(std::size_t i, std::size_t j, u32 value) {
    set(i, j, add_mod(coeff(i, j), value % modulus_.value(), modulus_.value()));
}

int BiPoly::total_degree() const noexcept {
    int deg = kZeroDegree;
    for (std::size_t i = 0; i < nx_; ++i)
        for (std::size_t j = 0; j < ny_; ++j)
            if (data_[i * ny_ + j] != 0) deg = std::max(deg, static_cast<int>(i + j));
    return deg;
}

u32 BiPoly::evaluate(u32 x, u32 y) const noexcept {
    const u32 p = modulus_.value();
    u32 acc = 0;
    for (std::size_t i = nx_; i-- > 0;) {
        u32 row = 0;
        for (std::size_t j = ny_; j-- > 0;) row = add_mod(mul_mod(row, y, p), data_[i * ny_ + j], p);
        acc = add_mod(mul_mod(acc, x, p), row, p);
    }
    return acc;
}

BiPoly BiPoly::homogeneous_component(int d) const {
    BiPoly h(modulus_);
    if (d < 0) return h;
    const auto du = static_cast<std::size_t>(d);
    for (std::size_t i = 0; i <= du && i < nx_; ++i) {
        const std::size_t j = du - i;
        if (j < ny_ && data_[i * ny_ + j] != 0) h.set(i, j, data_[i * ny_ + j]);
    }
    return h;
}

BiPoly BiPoly::scaled(u32 c) const {
    BiPoly r = *this;
    const u32 p = modulus_.value();
    for (u32& v : r.data_) v = mul_mod(v, c % p, p);
    r.trim();
    return r;
}

std::vector<BiPoly::Term> BiPoly::terms() const {
    std::vector<Term> out;
    for (std::size_t i = 0; i < nx_; ++i)
        for (std::size_t j = 0; j < ny_; ++j)
            if (data_[i * ny_ + j] != 0) out.push_back({i, j, data_[i * ny_ + j]});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
        return std::pair(a.i + a.j, a.i) < std::pair(b.i + b.j, b.i);
    });
    return out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    require_same(a.modulus_, b.modulus_);
    BiPoly r = a;
    r.resize(std::max(a.nx_, b.nx_), std::max(a.ny_, b.ny_));
    const u32 p = a.modulus_.value();
    for (std::size_t i = 0; i < b.nx_; ++i)
        for (std::size_t j = 0; j < b.ny_; ++j)
            r.data_[i * r.ny_ + j] = add_mod(r.data_[i * r.ny_ + j], b.data_[i * b.ny_ + j], p);
    r.trim();
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    require_same(a.modulus_, b.modulus_);
    BiPoly r = a;
    r.resize(std::max(a.nx_, b.nx_), std::max(a.ny_, b.ny_));
    const u32 p = a.modulus_.value();
    for (std::size_t i = 0; i < b.nx_; ++i)
        for (std::size_t j = 0; j < b.ny_; ++j)
            r.data_[i * r.ny_ + j] = sub_mod(r.data_[i * r.ny_ + j], b.data_[i * b.ny_ + j], p);
    r.trim();
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    require_same(a.modulus_, b.modulus_);
    BiPoly r(a.modulus_);
    if (a.is_zero() || b.is_zero()) return r;
    const u32 p = a.modulus_.value();
    r.resize(a.nx_ + b.nx_ - 1, a.ny_ + b.ny_ - 1);
    for (std::size_t i = 0; i < a.nx_; ++i)
        for (std::size_t j = 0; j < a.ny_; ++j) {
            const u32 c = a.data_[i * a.ny_ + j];
            if (c == 0) continue;
            for (std::size_t u = 0; u < b.nx_; ++u)
                for (std::size_t v = 0; v < b.ny_; ++v) {
                    u32& slot = r.data_[(i + u) * r.ny_ + (j + v)];
                    slot = add_mod(slot, mul_mod(c, b.data_[u * b.ny_ + v], p), p);
                }
        }
    r.trim();
    return r;
}

// ------------------------------------------------------------ text format

std::string to_text(const BiPoly& f) {
    std::ostringstream os;
    for (const auto& t : f.terms()) os << t.c << ':' << t.i << ',' << t.j << '\n';
    return os.str();
}

BiPoly parse_bipoly_text(std::string_view text, const Prime& p) {
    BiPoly f(p);
    std::size_t line_no = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::ParseError, "polynomial line " + std::to_string(line_no) + ": " + why);
    };
    auto number = [&](std::string_view s, i64& out) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) fail("bad number \"" + std::string(s) + "\"");
    };
    while (!text.empty()) {
        ++line_no;
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

        const std::size_t colon = line.find(':');
        const std::size_t comma = line.find(',', colon == std::string_view::npos ? 0 : colon);
        if (colon == std::string_view::npos || comma == std::string_view::npos) fail("expected c:i,j");
        i64 c = 0, i = 0, j = 0;
        number(line.substr(0, colon), c);
        number(line.substr(colon + 1, comma - colon - 1), i);
        number(line.substr(comma + 1), j);
        if (i < 0 || j < 0) fail("negative exponent");
        f.add_to(static_cast<std::size_t>(i), static_cast<std::size_t>(j), reduce(c, p.value()));
    }
    return f;
}

// ------------------------------------------------- proof polynomials

SymmetricProfile elementary_symmetric(const FpSet& s) {
    const u32 p = s.modulus().value();
    // Coefficients of prod (1 + x_i t): values[i] is sigma_i.
    std::vector<u32> e{1 % p};
    for (u32 x : s) {
        e.push_back(0);
        for (std::size_t i = e.size() - 1; i > 0; --i) e[i] = add_mod(e[i], mul_mod(e[i - 1], x, p), p);
    }
    return {s.modulus(), std::move(e)};
}

UniPoly vanishing_polynomial(const FpSet& s) {
    if (s.empty()) throw Error(ErrorCode::EmptySet, "vanishing polynomial of the empty set");
    const auto prof = elementary_symmetric(s);
    const std::size_t m = s.size();
    const u32 p = s.modulus().value();
    std::vector<i64> coeffs(m + 1, 0);
    for (std::size_t i = 0; i <= m; ++i) coeffs[m - i] = i % 2 == 0 ? prof.values[i] : neg_mod(prof.values[i], p);
    return UniPoly(s.modulus(), std::move(coeffs));
}

BiPoly build_locus_poly(const FpSet& c) {
    const Prime& p = c.modulus();
    BiPoly f = BiPoly::monomial(p, 1, 0, 1) - BiPoly::monomial(p, 0, 1, 1);
    for (u32 value : c) {
        BiPoly factor = BiPoly::monomial(p, 1, 0, 1) + BiPoly::monomial(p, 0, 1, 1);
        factor.set(0, 0, -static_cast<i64>(value));
        f = f * factor;
    }
    return f;
}

std::vector<BiPoly> homogeneous_components(const BiPoly& f) {
    std::vector<BiPoly> out;
    const int deg = f.total_degree();
    for (int d = 0; d <= deg; ++d) out.push_back(f.homogeneous_component(d));
    return out;
}

FieldElement cij(u32 i, i64 j, const Prime& p) {
    if (i == 0 || j < 0 || j > static_cast<i64>(i))
        throw Error(ErrorCode::IndexOutOfRange,
                    "C_{" + std::to_string(i) + "," + std::to_string(j) + "} needs 1 <= i and 0 <= j <= i");
    if (i > p.value())
        throw Error(ErrorCode::IndexOutOfRange,
                    "C_{" + std::to_string(i) + ",j} needs i <= p = " + std::to_string(p.value()));
    if (j == static_cast<i64>(i)) return FieldElement(1, p);
    if (j == 0) return FieldElement(-1, p);
    const auto ju = static_cast<u64>(j);
    return binomial_mod(i - 1, ju - 1, p) - binomial_mod(i - 1, ju, p);
}

BiPoly pi_poly(u32 i, const Prime& p) {
    if (i == 0) throw Error(ErrorCode::IndexOutOfRange, "p_i needs i >= 1");
    BiPoly f = BiPoly::monomial(p, 1, 0, 1) - BiPoly::monomial(p, 0, 1, 1);
    const BiPoly x_plus_y = BiPoly::monomial(p, 1, 0, 1) + BiPoly::monomial(p, 0, 1, 1);
    for (u32 t = 1; t < i; ++t) f = f * x_plus_y;
    return f;
}

BiPoly sigma_expansion(const FpSet& c, SizeCheck check) {
    if (check == SizeCheck::strict && c.size() % 2 != 0)
        throw Error(ErrorCode::OddSize, "|C| = " + std::to_string(c.size()) + " is odd");
    const Prime& p = c.modulus();
    const auto prof = elementary_symmetric(c);
    const auto top = static_cast<u32>(c.size() + 1);
    BiPoly f(p);
    for (u32 i = 0; i <= c.size(); ++i) {
        const u32 coef = i % 2 == 0 ? prof.values[i] : neg_mod(prof.values[i], p);
        if (coef != 0) f = f + pi_poly(top - i, p).scaled(coef);
    }
    return f;
}

FpSet roots_over_fp(const UniPoly& q) {
    if (q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "every residue is a root of 0");
    std::vector<i64> roots;
    for (u32 z = 0; z < q.modulus().value(); ++z)
        if (q.evaluate(z) == 0) roots.push_back(z);
    return FpSet(q.modulus(), roots);
}

bool splits_with_distinct_roots(const UniPoly& q) {
    return static_cast<int>(roots_over_fp(q).size()) == q.degree();
}

} // namespace rsumset
