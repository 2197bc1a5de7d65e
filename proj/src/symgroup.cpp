#include "wassoc/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wassoc {

Perm::Perm(std::vector<int> images)
{
    const int n = static_cast<int>(images.size());
    if (n < 1 || n > kMaxArity)
        throw std::invalid_argument("Perm: arity out of range");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int x : images) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("Perm: images are not a bijection of 1..n");
        seen[static_cast<std::size_t>(x)] = true;
    }
    n_ = n;
    for (int i = 0; i < n; ++i)
        img_[static_cast<std::size_t>(i)] = static_cast<int8_t>(images[static_cast<std::size_t>(i)]);
}

Perm Perm::identity(int n)
{
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Perm(im);
}

Perm Perm::parse_cycles(std::string_view text, int n)
{
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    if (s == "Id" || s == "id" || s.empty())
        return Perm(im);

    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == ' ') {
            ++pos;
            continue;
        }
        if (s[pos] != '(')
            throw std::invalid_argument("cycle notation: expected '(' in '" + std::string(text) + "'");
        const auto close = s.find(')', pos);
        if (close == std::string_view::npos)
            throw std::invalid_argument("cycle notation: unbalanced '(' in '" + std::string(text) + "'");
        std::vector<int> cyc;
        for (std::size_t k = pos + 1; k < close; ++k) {
            const char ch = s[k];
            if (ch < '1' || ch > '0' + n)
                throw std::invalid_argument("cycle notation: bad point in '" + std::string(text) + "'");
            cyc.push_back(ch - '0');
        }
        // Cycles compose right-to-left like functions.
        std::vector<int> step(static_cast<std::size_t>(n));
        std::iota(step.begin(), step.end(), 1);
        for (std::size_t k = 0; k < cyc.size(); ++k)
            step[static_cast<std::size_t>(cyc[k] - 1)] = cyc[(k + 1) % cyc.size()];
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            next[static_cast<std::size_t>(i)] = im[static_cast<std::size_t>(step[static_cast<std::size_t>(i)] - 1)];
        im = next;
        pos = close + 1;
    }
    return Perm(im);
}

std::vector<int> Perm::images() const
{
    return {img_.begin(), img_.begin() + n_};
}

Perm Perm::inverse() const
{
    std::vector<int> inv(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i)
        inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Perm(inv);
}

int Perm::sign() const
{
    int s = 1;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if ((*this)(i) > (*this)(j))
                s = -s;
    return s;
}

bool Perm::is_identity() const
{
    for (int i = 1; i <= n_; ++i)
        if ((*this)(i) != i)
            return false;
    return true;
}

std::string Perm::cycles() const
{
    if (is_identity())
        return "Id";
    std::string out;
    std::vector<bool> done(static_cast<std::size_t>(n_) + 1, false);
    for (int start = 1; start <= n_; ++start) {
        if (done[static_cast<std::size_t>(start)] || (*this)(start) == start)
            continue;
        out += '(';
        for (int x = start; !done[static_cast<std::size_t>(x)]; x = (*this)(x)) {
            done[static_cast<std::size_t>(x)] = true;
            out += static_cast<char>('0' + x);
        }
        out += ')';
    }
    return out;
}

std::string Perm::one_line() const
{
    std::string out;
    for (int i = 1; i <= n_; ++i)
        out += static_cast<char>('0' + (*this)(i));
    return out;
}

Perm compose(const Perm& a, const Perm& b)
{
    if (a.arity() != b.arity())
        throw std::invalid_argument("compose: arity mismatch");
    std::vector<int> im(static_cast<std::size_t>(a.arity()));
    for (int i = 1; i <= a.arity(); ++i)
        im[static_cast<std::size_t>(i - 1)] = a(b(i));
    return Perm(im);
}

Perm operator*(const Perm& a, const Perm& b)
{
    return compose(b, a);
}

namespace s3 {
Perm id() { return Perm({1, 2, 3}); }
Perm t12() { return Perm({2, 1, 3}); }
Perm t13() { return Perm({3, 2, 1}); }
Perm t23() { return Perm({1, 3, 2}); }
Perm c() { return Perm({2, 3, 1}); }
Perm c2() { return Perm({3, 1, 2}); }
}  // namespace s3

namespace {

std::vector<Perm> enumerate(int n)
{
    if (n == 3)
        return {s3::id(), s3::t12(), s3::t13(), s3::t23(), s3::c(), s3::c2()};
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

const std::vector<std::map<Perm, std::size_t>>& index_tables()
{
    static const auto tables = [] {
        std::vector<std::map<Perm, std::size_t>> t(kMaxArity + 1);
        for (int n = 1; n <= kMaxArity; ++n) {
            const auto& ps = all_perms(n);
            for (std::size_t i = 0; i < ps.size(); ++i)
                t[static_cast<std::size_t>(n)][ps[i]] = i;
        }
        return t;
    }();
    return tables;
}

}  // namespace

const std::vector<Perm>& all_perms(int n)
{
    if (n < 1 || n > kMaxArity)
        throw std::invalid_argument("all_perms: arity out of range");
    static const auto table = [] {
        std::vector<std::vector<Perm>> t(kMaxArity + 1);
        for (int k = 1; k <= kMaxArity; ++k)
            t[static_cast<std::size_t>(k)] = enumerate(k);
        return t;
    }();
    return table[static_cast<std::size_t>(n)];
}

std::size_t perm_index(const Perm& p)
{
    return index_tables()[static_cast<std::size_t>(p.arity())].at(p);
}

GroupAlgebraElement::GroupAlgebraElement(const Perm& p, Rational coeff) : n_(p.arity())
{
    add(p, coeff);
}

GroupAlgebraElement::GroupAlgebraElement(int n, std::initializer_list<std::pair<Perm, Rational>> terms)
    : n_(n)
{
    for (const auto& [p, c] : terms)
        add(p, c);
}

GroupAlgebraElement GroupAlgebraElement::from_coordinates(int n, const Vec& coords)
{
    const auto& ps = all_perms(n);
    if (coords.size() != ps.size())
        throw std::invalid_argument("from_coordinates: length mismatch");
    GroupAlgebraElement v(n);
    for (std::size_t i = 0; i < ps.size(); ++i)
        v.add(ps[i], coords[i]);
    return v;
}

Rational GroupAlgebraElement::coeff(const Perm& p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(const Perm& p, const Rational& c)
{
    if (p.arity() != n_)
        throw std::invalid_argument("GroupAlgebraElement: arity mismatch");
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Vec GroupAlgebraElement::coordinates() const
{
    Vec v = zero_vec(all_perms(n_).size());
    for (const auto& [p, c] : terms_)
        v[perm_index(p)] = c;
    return v;
}

std::string GroupAlgebraElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& p : all_perms(n_)) {
        auto it = terms_.find(p);
        if (it == terms_.end())
            continue;
        const Rational& c = it->second;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        const Rational a = abs(c);
        if (a != 1)
            out += pretty_rational(a) + "*";
        out += p.cycles();
    }
    return out;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o)
{
    for (const auto& [p, c] : o.terms_)
        add(p, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o)
{
    for (const auto& [p, c] : o.terms_)
        add(p, -c);
    return *this;
}

GroupAlgebraElement operator*(const Rational& s, const GroupAlgebraElement& v)
{
    GroupAlgebraElement r(v.n_);
    for (const auto& [p, c] : v.terms_)
        r.add(p, s * c);
    return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
{
    if (a.n_ != b.n_)
        throw std::invalid_argument("group algebra product: arity mismatch");
    GroupAlgebraElement r(a.n_);
    for (const auto& [p, x] : a.terms_)
        for (const auto& [q, y] : b.terms_)
            r.add(p * q, x * y);
    return r;
}

GroupAlgebraElement act(const GroupAlgebraElement& v, const Perm& s)
{
    if (v.arity() != s.arity())
        throw std::invalid_argument("act: arity mismatch");
    return v * GroupAlgebraElement(s);
}

std::vector<GroupAlgebraElement> orbit(const GroupAlgebraElement& v)
{
    std::vector<GroupAlgebraElement> out;
    for (const auto& s : all_perms(v.arity()))
        out.push_back(act(v, s));
    return out;
}

Matrix orbit_matrix(const GroupAlgebraElement& v)
{
    std::vector<Vec> rows;
    for (const auto& w : orbit(v))
        rows.push_back(w.coordinates());
    return Matrix::from_rows(rows, all_perms(v.arity()).size());
}

std::size_t orbit_span_dim(const GroupAlgebraElement& v)
{
    return rank(orbit_matrix(v));
}

namespace {

std::vector<Vec> orbit_rows(const GroupAlgebraElement& v)
{
    std::vector<Vec> rows;
    for (const auto& w : orbit(v))
        rows.push_back(w.coordinates());
    return rows;
}

}  // namespace

bool in_orbit_span(const GroupAlgebraElement& w, const GroupAlgebraElement& v)
{
    if (w.arity() != v.arity())
        throw std::invalid_argument("in_orbit_span: arity mismatch");
    return in_span(w.coordinates(), orbit_rows(v));
}

bool relations_equivalent(const GroupAlgebraElement& v, const GroupAlgebraElement& v2)
{
    if (v.arity() != v2.arity())
        throw std::invalid_argument("relations_equivalent: arity mismatch");
    return same_span(orbit_rows(v), orbit_rows(v2), all_perms(v.arity()).size());
}

GroupAlgebraElement v_wa()
{
    return GroupAlgebraElement(3, {{s3::id(), 1}, {s3::c(), 1}, {s3::t12(), -1}});
}

}  // namespace wassoc
