#include "wassoc/identity.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace wassoc {

namespace {

std::string render(const TreeCode& code, std::size_t& pos)
{
    const int8_t head = code[pos++];
    if (head > 0)
        return "x" + std::to_string(head);
    const bool left_leaf = code[pos] > 0;
    std::string a = render(code, pos);
    const bool right_leaf = code[pos] > 0;
    std::string b = render(code, pos);
    if (head == kPhi)
        return "f(" + a + "," + b + ")";
    if (!left_leaf)
        a = "(" + a + ")";
    if (!right_leaf)
        b = "(" + b + ")";
    return a + b;
}

std::vector<TreeShape> build_shapes(int n, const std::vector<std::vector<TreeShape>>& smaller)
{
    if (n == 1)
        return {TreeShape{"."}};
    std::vector<TreeShape> out;
    for (int k = n - 1; k >= 1; --k)
        for (const auto& l : smaller[static_cast<std::size_t>(k)])
            for (const auto& r : smaller[static_cast<std::size_t>(n - k)])
                out.push_back(TreeShape{"m" + l.code + r.code});
    return out;
}

TreeCode label_shape(const std::string& shape, const Perm& word)
{
    TreeCode code;
    code.reserve(shape.size());
    int leaf = 0;
    for (char ch : shape) {
        if (ch == 'm')
            code.push_back(kMu);
        else if (ch == 'f')
            code.push_back(kPhi);
        else
            code.push_back(static_cast<int8_t>(word(++leaf)));
    }
    return code;
}

struct BasisTable {
    std::vector<TreeCode> codes;
    std::map<TreeCode, std::size_t> index;
};

const BasisTable& basis_table(int n, int formal_ops)
{
    if (n < 1 || n > kMaxArity || formal_ops < 0 || formal_ops > 1)
        throw std::invalid_argument("free_basis: unsupported arity or operation count");
    static const auto tables = [] {
        std::vector<std::array<BasisTable, 2>> t(kMaxArity + 1);
        for (int k = 1; k <= kMaxArity; ++k) {
            std::vector<std::string> plain, marked;
            for (const auto& s : tree_shapes(k)) {
                plain.push_back(s.code);
                for (std::size_t i = 0; i < s.code.size(); ++i)
                    if (s.code[i] == 'm') {
                        std::string f = s.code;
                        f[i] = 'f';
                        marked.push_back(f);
                    }
            }
            for (int ops = 0; ops <= 1; ++ops) {
                auto& tab = t[static_cast<std::size_t>(k)][static_cast<std::size_t>(ops)];
                for (const auto& shape : ops == 0 ? plain : marked)
                    for (const auto& w : all_perms(k)) {
                        tab.index.emplace(label_shape(shape, w), tab.codes.size());
                        tab.codes.push_back(label_shape(shape, w));
                    }
            }
        }
        return t;
    }();
    return tables[static_cast<std::size_t>(n)][static_cast<std::size_t>(formal_ops)];
}

}  // namespace

int TreeShape::leaves() const
{
    return static_cast<int>(std::count(code.begin(), code.end(), '.'));
}

std::string TreeShape::to_string() const
{
    TreeCode c;
    for (char ch : code)
        c.push_back(ch == 'm' ? kMu : ch == 'f' ? kPhi : int8_t{1});
    std::size_t pos = 0;
    std::string s = render(c, pos);
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'x') {
            out += '.';
            ++i;
        } else {
            out += s[i];
        }
    }
    return out;
}

const std::vector<TreeShape>& tree_shapes(int n)
{
    if (n < 1 || n > kMaxArity)
        throw std::invalid_argument("tree_shapes: arity out of range");
    static const auto cache = [] {
        std::vector<std::vector<TreeShape>> t(kMaxArity + 1);
        for (int k = 1; k <= kMaxArity; ++k)
            t[static_cast<std::size_t>(k)] = build_shapes(k, t);
        return t;
    }();
    return cache[static_cast<std::size_t>(n)];
}

TreeCode Monomial::code() const
{
    return label_shape(shape.code, word);
}

Monomial Monomial::from_code(const TreeCode& code)
{
    std::string shape;
    std::vector<int> word;
    for (int8_t x : code) {
        if (x == kMu)
            shape += 'm';
        else if (x == kPhi)
            shape += 'f';
        else {
            shape += '.';
            word.push_back(x);
        }
    }
    return Monomial{TreeShape{shape}, Perm(word)};
}

MultilinearIdentity MultilinearIdentity::leaf(int label)
{
    if (label < 1 || label > 127)
        throw std::invalid_argument("leaf label out of range");
    return term(TreeCode{static_cast<int8_t>(label)});
}

MultilinearIdentity MultilinearIdentity::term(const TreeCode& code, const Rational& c)
{
    MultilinearIdentity e;
    e.add(code, c);
    return e;
}

MultilinearIdentity MultilinearIdentity::term(const Monomial& m, const Rational& c)
{
    return term(m.code(), c);
}

int MultilinearIdentity::arity() const
{
    if (terms_.empty())
        return 0;
    const auto& code = terms_.begin()->first;
    return static_cast<int>(std::count_if(code.begin(), code.end(), [](int8_t x) { return x > 0; }));
}

bool MultilinearIdentity::is_multilinear() const
{
    const int n = arity();
    for (const auto& [code, c] : terms_) {
        std::vector<int> labels;
        for (int8_t x : code)
            if (x > 0)
                labels.push_back(x);
        std::sort(labels.begin(), labels.end());
        if (static_cast<int>(labels.size()) != n)
            return false;
        for (int i = 0; i < n; ++i)
            if (labels[static_cast<std::size_t>(i)] != i + 1)
                return false;
    }
    return true;
}

Rational MultilinearIdentity::coeff(const TreeCode& code) const
{
    auto it = terms_.find(code);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultilinearIdentity::add(const TreeCode& code, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(code, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultilinearIdentity& MultilinearIdentity::operator+=(const MultilinearIdentity& o)
{
    for (const auto& [code, c] : o.terms_)
        add(code, c);
    return *this;
}

MultilinearIdentity& MultilinearIdentity::operator-=(const MultilinearIdentity& o)
{
    for (const auto& [code, c] : o.terms_)
        add(code, -c);
    return *this;
}

MultilinearIdentity operator*(const Rational& s, const MultilinearIdentity& e)
{
    MultilinearIdentity r;
    for (const auto& [code, c] : e.terms_)
        r.add(code, s * c);
    return r;
}

MultilinearIdentity MultilinearIdentity::relabel(const std::vector<int>& mapping) const
{
    MultilinearIdentity r;
    for (const auto& [orig, c] : terms_) {
        TreeCode code = orig;
        for (auto& x : code)
            if (x > 0)
                x = static_cast<int8_t>(mapping.at(static_cast<std::size_t>(x)));
        r.add(code, c);
    }
    return r;
}

std::string MultilinearIdentity::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [code, c] : terms_) {
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        const Rational a = abs(c);
        if (a != 1)
            out += pretty_rational(a) + "*";
        std::size_t pos = 0;
        out += render(code, pos);
    }
    return out;
}

namespace {

MultilinearIdentity binary(int8_t op, const MultilinearIdentity& a, const MultilinearIdentity& b)
{
    MultilinearIdentity r;
    for (const auto& [ca, x] : a.terms())
        for (const auto& [cb, y] : b.terms()) {
            TreeCode code{op};
            code.insert(code.end(), ca.begin(), ca.end());
            code.insert(code.end(), cb.begin(), cb.end());
            r.add(code, x * y);
        }
    return r;
}

}  // namespace

MultilinearIdentity mu(const MultilinearIdentity& a, const MultilinearIdentity& b)
{
    return binary(kMu, a, b);
}

MultilinearIdentity phi(const MultilinearIdentity& a, const MultilinearIdentity& b)
{
    return binary(kPhi, a, b);
}

MultilinearIdentity substitute(const MultilinearIdentity& e, int label, const MultilinearIdentity& f)
{
    MultilinearIdentity r;
    for (const auto& [code, c] : e.terms()) {
        const auto at = std::find(code.begin(), code.end(), static_cast<int8_t>(label));
        if (at == code.end()) {
            r.add(code, c);
            continue;
        }
        if (std::find(at + 1, code.end(), static_cast<int8_t>(label)) != code.end())
            throw std::invalid_argument("substitute: label occurs more than once");
        for (const auto& [fc, y] : f.terms()) {
            TreeCode out(code.begin(), at);
            out.insert(out.end(), fc.begin(), fc.end());
            out.insert(out.end(), at + 1, code.end());
            r.add(out, c * y);
        }
    }
    return r;
}

MultilinearIdentity compose(const MultilinearIdentity& e, const std::vector<MultilinearIdentity>& args)
{
    MultilinearIdentity r;
    for (const auto& [code, c] : e.terms()) {
        std::vector<std::pair<TreeCode, Rational>> partial{{TreeCode{}, c}};
        for (int8_t x : code) {
            if (x < 0) {
                for (auto& p : partial)
                    p.first.push_back(x);
                continue;
            }
            const auto& arg = args.at(static_cast<std::size_t>(x - 1));
            std::vector<std::pair<TreeCode, Rational>> next;
            for (const auto& [pc, pv] : partial)
                for (const auto& [ac, av] : arg.terms()) {
                    TreeCode t = pc;
                    t.insert(t.end(), ac.begin(), ac.end());
                    next.emplace_back(std::move(t), pv * av);
                }
            partial = std::move(next);
        }
        for (const auto& [pc, pv] : partial)
            r.add(pc, pv);
    }
    return r;
}

MultilinearIdentity apply_group_vector(const MultilinearIdentity& e, const GroupAlgebraElement& v)
{
    MultilinearIdentity r;
    for (const auto& [code, c] : e.terms())
        for (const auto& [s, a] : v.terms()) {
            TreeCode t = code;
            for (auto& x : t)
                if (x > 0)
                    x = static_cast<int8_t>(s(x));
            r.add(t, c * a);
        }
    return r;
}

MultilinearIdentity associator()
{
    using E = MultilinearIdentity;
    return mu(E::leaf(1), mu(E::leaf(2), E::leaf(3))) - mu(mu(E::leaf(1), E::leaf(2)), E::leaf(3));
}

MultilinearIdentity wa_expression()
{
    return apply_group_vector(associator(), v_wa());
}

GroupAlgebraElement lie_admissible_vector()
{
    using namespace s3;
    return GroupAlgebraElement(3, {{id(), 1}, {t12(), -1}, {t13(), -1}, {t23(), -1}, {c(), 1}, {c2(), 1}});
}

GroupAlgebraElement leibniz_vector()
{
    using namespace s3;
    return GroupAlgebraElement(3, {{id(), 1}, {t12(), 1}, {t13(), 1}, {t23(), -1}, {c(), -1}, {c2(), 1}});
}

MultilinearIdentity lie_admissible_expression()
{
    return apply_group_vector(associator(), lie_admissible_vector());
}

MultilinearIdentity flexible_expression()
{
    return apply_group_vector(associator(), GroupAlgebraElement(3, {{s3::id(), 1}, {s3::t13(), 1}}));
}

MultilinearIdentity leibniz_expression()
{
    return apply_group_vector(associator(), leibniz_vector());
}

MultilinearIdentity jordan_expression()
{
    using E = MultilinearIdentity;
    E r;
    for (const auto& s : all_perms(3))
        r += compose(associator(), {E::leaf(s(1)), E::leaf(4), mu(E::leaf(s(2)), E::leaf(s(3)))});
    return r;
}

MultilinearIdentity jacobi_expression()
{
    using E = MultilinearIdentity;
    const E x = E::leaf(1), y = E::leaf(2), z = E::leaf(3);
    return mu(x, mu(y, z)) + mu(y, mu(z, x)) + mu(z, mu(x, y));
}

const std::vector<TreeCode>& free_basis(int n, int formal_ops)
{
    return basis_table(n, formal_ops).codes;
}

Vec coordinates(const MultilinearIdentity& e, int formal_ops)
{
    if (e.is_zero())
        throw std::invalid_argument("coordinates: zero identity has no arity");
    const auto& tab = basis_table(e.arity(), formal_ops);
    Vec v = zero_vec(tab.codes.size());
    for (const auto& [code, c] : e.terms()) {
        auto it = tab.index.find(code);
        if (it == tab.index.end())
            throw std::invalid_argument("coordinates: term outside the free basis");
        v[it->second] = c;
    }
    return v;
}

MultilinearIdentity from_coordinates(int n, const Vec& coords, int formal_ops)
{
    const auto& codes = free_basis(n, formal_ops);
    if (coords.size() != codes.size())
        throw std::invalid_argument("from_coordinates: length mismatch");
    MultilinearIdentity e;
    for (std::size_t i = 0; i < codes.size(); ++i)
        e.add(codes[i], coords[i]);
    return e;
}

}  // namespace wassoc
