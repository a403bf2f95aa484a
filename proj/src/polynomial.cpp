#include "arrmono/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "arrmono/errors.hpp"
#include "arrmono/primefield.hpp"

namespace arrmono {

void Polynomial::recompute_flags() {
    if (terms_.empty()) {
        degree_ = -1;
        homogeneous_ = true;
        integer_ = true;
        return;
    }
    degree_ = terms_.front().m.degree();  // leading term has max degree in grlex
    homogeneous_ = terms_.back().m.degree() == degree_;
    integer_ = true;
    for (const Term& t : terms_)
        if (!is_integer(t.c)) {
            integer_ = false;
            break;
        }
}

Polynomial Polynomial::constant(const Rat& c) { return monomial(Mono(0, 0, 0, 0), c); }

Polynomial Polynomial::monomial(Mono m, const Rat& c) {
    Polynomial p;
    if (c != 0) {
        p.terms_.push_back({m, c});
        p.recompute_flags();
    }
    return p;
}

Polynomial Polynomial::variable(int var) {
    int e[4] = {0, 0, 0, 0};
    e[var] = 1;
    return monomial(Mono(e[0], e[1], e[2], e[3]));
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return b.m < a.m; });
    Polynomial p;
    p.terms_.reserve(terms.size());
    for (Term& t : terms) {
        if (t.c == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c += t.c;
            if (p.terms_.back().c == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    p.recompute_flags();
    return p;
}

Rat Polynomial::coeff(Mono m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Mono key) { return key < t.m; });
    if (it != terms_.end() && it->m == m) return it->c;
    return Rat(0);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (b->m < a->m) {
            r.terms_.push_back(*a++);
        } else if (a->m < b->m) {
            r.terms_.push_back(*b++);
        } else {
            Rat c = a->c + b->c;
            if (c != 0) r.terms_.push_back({a->m, std::move(c)});
            ++a, ++b;
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, o.terms_.end());
    r.recompute_flags();
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Rat& s) const {
    if (s == 0) return Polynomial();
    Polynomial r(*this);
    for (Term& t : r.terms_) t.c *= s;
    r.recompute_flags();
    return r;
}

Polynomial Polynomial::mul_mono(Mono m, const Rat& s) const {
    if (s == 0) return Polynomial();
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m * m, t.c * s});
    r.recompute_flags();
    return r;
}

Int Polynomial::denominator_lcm() const {
    Int l(1);
    for (const Term& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den().get_mpz_t());
    return l;
}

Int Polynomial::scaled_height(const Int& scale) const {
    Int h(0), v;
    for (const Term& t : terms_) {
        mpz_divexact(v.get_mpz_t(), scale.get_mpz_t(), t.c.get_den().get_mpz_t());
        v *= t.c.get_num();
        mpz_abs(v.get_mpz_t(), v.get_mpz_t());
        if (v > h) h = v;
    }
    return h;
}

Int Polynomial::scaled_length(const Int& scale) const {
    Int s(0), v;
    for (const Term& t : terms_) {
        mpz_divexact(v.get_mpz_t(), scale.get_mpz_t(), t.c.get_den().get_mpz_t());
        v *= t.c.get_num();
        mpz_abs(v.get_mpz_t(), v.get_mpz_t());
        s += v;
    }
    return s;
}

namespace {

// Integer-cleared view of a polynomial: coefficient i is num[i]/scale.
struct ClearedView {
    std::vector<Int> num;
    Int scale;
};

ClearedView clear_denominators(const Polynomial& p) {
    ClearedView v;
    v.scale = p.denominator_lcm();
    v.num.reserve(p.term_count());
    Int q;
    for (const auto& t : p.terms()) {
        mpz_divexact(q.get_mpz_t(), v.scale.get_mpz_t(), t.c.get_den().get_mpz_t());
        v.num.push_back(q * t.c.get_num());
    }
    return v;
}

}  // namespace

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    // convolution over cleared integers, then one rational division at the end
    ClearedView A = clear_denominators(*this);
    ClearedView B = clear_denominators(o);
    std::unordered_map<uint64_t, Int> acc;
    acc.reserve(std::max(terms_.size(), o.terms_.size()) * 4);
    for (size_t i = 0; i < terms_.size(); ++i) {
        const uint64_t ka = terms_[i].m.key();
        const mpz_srcptr na = A.num[i].get_mpz_t();
        for (size_t j = 0; j < o.terms_.size(); ++j) {
            Int& slot = acc[ka + o.terms_[j].m.key()];
            mpz_addmul(slot.get_mpz_t(), na, B.num[j].get_mpz_t());
        }
    }
    const Int denom = A.scale * B.scale;
    const bool unit_denom = denom == 1;
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [key, val] : acc) {
        if (val == 0) continue;
        Rat c;
        if (unit_denom) {
            c = Rat(std::move(val));
        } else {
            c = Rat(val, denom);
            c.canonicalize();
        }
        out.push_back({Mono(key), std::move(c)});
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return b.m < a.m; });
    Polynomial r;
    r.terms_ = std::move(out);
    r.recompute_flags();
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Polynomial Polynomial::diff(int var) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        int e = t.m.e(var);
        if (e == 0) continue;
        auto ex = t.m.exponents();
        ex[var] -= 1;
        out.push_back({Mono(ex[0], ex[1], ex[2], ex[3]), t.c * e});
    }
    // differentiation preserves grlex order on surviving terms
    Polynomial r;
    r.terms_ = std::move(out);
    r.recompute_flags();
    return r;
}

Rat Polynomial::eval(const std::array<Rat, 4>& point) const {
    // per-variable power tables
    std::array<std::vector<Rat>, 4> pow;
    for (int v = 0; v < 4; ++v) pow[v].push_back(Rat(1));
    Rat sum(0);
    for (const Term& t : terms_) {
        Rat prod = t.c;
        for (int v = 0; v < 4; ++v) {
            int e = t.m.e(v);
            while (static_cast<int>(pow[v].size()) <= e) pow[v].push_back(pow[v].back() * point[v]);
            prod *= pow[v][e];
        }
        sum += prod;
    }
    return sum;
}

Polynomial Polynomial::exact_div(const Polynomial& q) const {
    if (q.is_zero()) throw NotDivisible("division by zero polynomial");
    if (is_zero()) return Polynomial();
    // working remainder as an ordered map, leading term first
    std::map<uint64_t, Rat, std::greater<uint64_t>> rem;
    for (const Term& t : terms_) rem.emplace(t.m.key(), t.c);
    const Mono qlead = q.leading_term().m;
    const Rat& qc = q.leading_term().c;
    std::vector<Term> quot;
    while (!rem.empty()) {
        Mono lead(rem.begin()->first);
        if (!qlead.divides(lead))
            throw NotDivisible("term " + lead.to_string() + " not reducible by divisor leading term " +
                               qlead.to_string());
        Mono qm = qlead.quotient_into(lead);
        Rat qcoef = rem.begin()->second / qc;
        quot.push_back({qm, qcoef});
        for (const Term& t : q.terms()) {
            uint64_t key = (t.m * qm).key();
            auto it = rem.find(key);
            if (it == rem.end()) {
                rem.emplace(key, -qcoef * t.c);
            } else {
                it->second -= qcoef * t.c;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return from_terms(std::move(quot));
}

Polynomial Polynomial::substitute_linear(int var, const std::array<Rat, 4>& coeffs) const {
    // group by the eliminated exponent; multiply each group by ell^e
    Polynomial ell;
    {
        std::vector<Term> lt;
        for (int v = 0; v < 4; ++v)
            if (v != var && coeffs[v] != 0) {
                int e[4] = {0, 0, 0, 0};
                e[v] = 1;
                lt.push_back({Mono(e[0], e[1], e[2], e[3]), coeffs[v]});
            }
        ell = from_terms(std::move(lt));
    }
    int maxe = 0;
    for (const Term& t : terms_) maxe = std::max(maxe, t.m.e(var));
    std::vector<Polynomial> ellpow(static_cast<size_t>(maxe) + 1);
    ellpow[0] = constant(Rat(1));
    for (int e = 1; e <= maxe; ++e) ellpow[e] = ellpow[e - 1] * ell;

    std::vector<std::vector<Term>> groups(static_cast<size_t>(maxe) + 1);
    for (const Term& t : terms_) {
        auto ex = t.m.exponents();
        int e = ex[var];
        ex[var] = 0;
        groups[e].push_back({Mono(ex[0], ex[1], ex[2], ex[3]), t.c});
    }
    Polynomial r;
    for (int e = 0; e <= maxe; ++e) {
        if (groups[e].empty()) continue;
        r = r + from_terms(std::move(groups[e])) * ellpow[e];
    }
    return r;
}

Polynomial Polynomial::permute_vars(const std::array<int, 4>& perm) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        int e[4] = {0, 0, 0, 0};
        for (int v = 0; v < 4; ++v) e[perm[v]] = t.m.e(v);
        out.push_back({Mono(e[0], e[1], e[2], e[3]), t.c});
    }
    return from_terms(std::move(out));
}

std::string Polynomial::to_poly4() const {
    std::ostringstream os;
    write_poly4(os);
    return os.str();
}

void Polynomial::write_poly4(std::ostream& os) const {
    os << "POLY4 v1 degree=" << degree_ << " terms=" << terms_.size() << "\n";
    for (const Term& t : terms_) {
        os << rat_to_string(t.c) << " " << t.m.e(0) << " " << t.m.e(1) << " " << t.m.e(2) << " "
           << t.m.e(3) << "\n";
    }
}

Polynomial Polynomial::from_poly4(const std::string& text) {
    std::istringstream is(text);
    return read_poly4(is);
}

Polynomial Polynomial::read_poly4(std::istream& is) {
    std::string word;
    int degree = 0;
    size_t nterms = 0;
    if (!(is >> word) || word != "POLY4") throw IoError("POLY4: bad magic");
    if (!(is >> word) || word != "v1") throw IoError("POLY4: unsupported version");
    if (!(is >> word) || word.rfind("degree=", 0) != 0) throw IoError("POLY4: missing degree");
    degree = std::stoi(word.substr(7));
    if (!(is >> word) || word.rfind("terms=", 0) != 0) throw IoError("POLY4: missing term count");
    nterms = static_cast<size_t>(std::stoull(word.substr(6)));

    Polynomial p;
    p.terms_.reserve(nterms);
    uint64_t prev_key = ~0ULL;
    for (size_t i = 0; i < nterms; ++i) {
        std::string coef;
        int e1, e2, e3, e4;
        if (!(is >> coef >> e1 >> e2 >> e3 >> e4)) throw IoError("POLY4: truncated term list");
        Rat c = rat_from_string(coef);
        if (c == 0) throw IoError("POLY4: explicit zero coefficient");
        Mono m(e1, e2, e3, e4);
        if (m.key() >= prev_key) throw IoError("POLY4: terms out of canonical order");
        prev_key = m.key();
        p.terms_.push_back({m, std::move(c)});
    }
    p.recompute_flags();
    if (p.degree() != degree) throw IoError("POLY4: degree mismatch in header");
    return p;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const Term& t : terms_) {
        if (!s.empty()) s += " + ";
        s += (is_integer(t.c) ? t.c.get_num().get_str() : rat_to_string(t.c));
        if (t.m.degree() > 0) s += "*" + t.m.to_string();
    }
    return s;
}

Polynomial poly_dot(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
    if (a.size() != b.size()) throw DegreeMismatch("poly_dot: size mismatch");
    Polynomial s;
    for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
}

bool product_sum_vanishes(
    const std::vector<std::pair<const Polynomial*, const Polynomial*>>& prods) {
    if (prods.empty()) return true;
    int prod_degree = -1;
    Int global_den(1);
    for (auto [a, b] : prods) {
        if (a->is_zero() || b->is_zero()) continue;
        if (!a->homogeneous() || !b->homogeneous())
            throw DegreeMismatch("product_sum_vanishes: inputs must be homogeneous");
        int d = a->degree() + b->degree();
        if (prod_degree == -1) prod_degree = d;
        if (d != prod_degree)
            throw DegreeMismatch("product_sum_vanishes: mixed product degrees");
        mpz_lcm(global_den.get_mpz_t(), global_den.get_mpz_t(), a->denominator_lcm().get_mpz_t());
        mpz_lcm(global_den.get_mpz_t(), global_den.get_mpz_t(), b->denominator_lcm().get_mpz_t());
    }
    if (prod_degree == -1) return true;  // all products vanish structurally

    // After scaling every factor by L = lcm of all denominators, each
    // coefficient of the sum is an integer bounded by
    //   B = sum over products of min(len1(La)*height(Lb), len1(Lb)*height(La)).
    // Residues vanishing modulo a prime product > 2B force exact zero.
    Int bound(0);
    for (auto [a, b] : prods) {
        if (a->is_zero() || b->is_zero()) continue;
        Int c1 = a->scaled_length(global_den) * b->scaled_height(global_den);
        Int c2 = b->scaled_length(global_den) * a->scaled_height(global_den);
        bound += (c1 < c2 ? c1 : c2);
    }
    Int needed = 2 * bound + 1;

    const int64_t dim = mono_count(prod_degree, 4);
    std::vector<uint64_t> accum(static_cast<size_t>(dim));
    Int prime_product(1);
    uint64_t prime_seed = 0x5eedbeef;
    while (prime_product < needed) {
        uint64_t p = gen_primes(1, 62, prime_seed++)[0];
        if (mpz_divisible_ui_p(global_den.get_mpz_t(), p)) continue;  // must stay invertible
        FpCtx F(p);
        std::fill(accum.begin(), accum.end(), 0);
        for (auto [a, b] : prods) {
            if (a->is_zero() || b->is_zero()) continue;
            auto ra = poly_mod(*a, p);
            auto rb = poly_mod(*b, p);
            for (const auto& [ma, va] : ra)
                for (const auto& [mb, vb] : rb) {
                    size_t idx = static_cast<size_t>(mono_rank(Mono(ma.key() + mb.key()), 4));
                    accum[idx] = F.addmul(accum[idx], va, vb);
                }
        }
        for (uint64_t v : accum)
            if (v != 0) return false;
        prime_product *= Int(static_cast<unsigned long>(p));
    }
    return true;
}

std::vector<std::pair<Mono, uint64_t>> poly_mod(const Polynomial& p, uint64_t prime) {
    std::vector<std::pair<Mono, uint64_t>> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        uint64_t v = reduce_mod(t.c, prime);
        if (v != 0) out.emplace_back(t.m, v);
    }
    return out;
}

}  // namespace arrmono
