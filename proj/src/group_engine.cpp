#include "lienil/group_engine.hpp"

#include <charconv>
#include <limits>
#include <set>
#include <sstream>

#include "lienil/fp_linalg.hpp"

namespace lienil {

bool Element::is_identity() const {
    for (auto v : e)
        if (v != 0) return false;
    return true;
}

std::string SmallGroupId::str() const { return "S(" + std::to_string(order) + "," + std::to_string(number) + ")"; }

ParseError::ParseError(int line, int column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line), column_(column), detail_(msg) {}

PcPresentation::PcPresentation(PresentationData data) : data_(std::move(data)) {}

PcGroupPtr PcPresentation::create(PresentationData data) {
    const int p = data.p;
    const int n = data.ngens;
    if (!is_prime(static_cast<std::uint64_t>(p)) || p > 251)
        throw std::invalid_argument("modulus is not a prime below 256: " + std::to_string(p));
    if (n < 0 || n > kMaxGens) throw std::invalid_argument("number of generators out of range: " + std::to_string(n));
    data.power.resize(static_cast<std::size_t>(n));
    data.comm.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) data.comm[j].resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < kMaxGens; ++k) {
            const int v = data.power[i][k];
            if (v == 0) continue;
            if (v >= p) throw std::invalid_argument("exponent out of range in power relation");
            if (k <= i || k >= n) throw std::invalid_argument("relation referencing earlier-or-equal generators");
        }
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < kMaxGens; ++k) {
                const int v = data.comm[j][i][k];
                if (v == 0) continue;
                if (v >= p) throw std::invalid_argument("exponent out of range in commutator relation");
                if (k <= j || k >= n) throw std::invalid_argument("relation referencing earlier-or-equal generators");
            }
        for (int j = 0; j <= i; ++j)
            if (!data.comm[j][i].is_identity())
                throw std::invalid_argument("relation referencing earlier-or-equal generators");
    }
    std::uint64_t order = 1;
    for (int i = 0; i < n; ++i) {
        if (order > (std::numeric_limits<std::uint64_t>::max() >> 1) / static_cast<std::uint64_t>(p))
            throw std::invalid_argument("group order p^n does not fit in 63 bits");
        order *= static_cast<std::uint64_t>(p);
    }
    std::shared_ptr<PcPresentation> G(new PcPresentation(std::move(data)));
    G->order_ = order;
    G->radix_.assign(static_cast<std::size_t>(n), 1);
    for (int i = n - 2; i >= 0; --i) G->radix_[i] = G->radix_[i + 1] * static_cast<std::uint64_t>(p);
    G->build_tables();
    G->check_consistency();
    return G;
}

Element PcPresentation::generator(int i) const {
    Element g;
    g[static_cast<std::size_t>(i)] = 1;
    return g;
}

void PcPresentation::build_tables() {
    const int n = ngens();
    const int p = this->p();
    conj_pow_.assign(static_cast<std::size_t>(n) * n * p, Element{});
    commutes_with_tail_.assign(static_cast<std::size_t>(n), true);
    for (int i = n - 1; i >= 0; --i) {
        for (int k = i + 1; k < n; ++k) {
            Element c = data_.comm[k][i];
            if (!c.is_identity()) commutes_with_tail_[i] = false;
            c[k] = 1;
            auto* row = &conj_pow_[(static_cast<std::size_t>(i) * n + k) * p];
            row[0] = Element{};
            row[1] = c;
            for (int t = 2; t < p; ++t) row[t] = mul_from(row[t - 1], c, i + 1);
        }
    }
}

Element PcPresentation::conj_tail(const Element& s, int i, int times) const {
    if (commutes_with_tail_[i]) return s;
    const int n = ngens();
    const int p = this->p();
    Element cur = s;
    for (int t = 0; t < times; ++t) {
        Element r{};
        for (int k = i + 1; k < n; ++k) {
            if (cur[k] == 0) continue;
            r = mul_from(r, conj_pow_[(static_cast<std::size_t>(i) * n + k) * p + cur[k]], i + 1);
        }
        cur = r;
    }
    return cur;
}

// Product of x and y, both supported on generators >= from.
Element PcPresentation::mul_from(const Element& x, const Element& y, int from) const {
    const int n = ngens();
    int i = from;
    while (i < n && y[i] == 0) ++i;
    if (i >= n) return x;
    const int p = this->p();
    const int e = y[i];

    Element result = x;
    Element s{};
    bool s_trivial = true;
    for (int k = i + 1; k < n; ++k) {
        s[k] = x[k];
        result[k] = 0;
        if (s[k]) s_trivial = false;
    }
    Element tail = s_trivial ? s : conj_tail(s, i, e);
    int sum = result[i] + e;
    if (sum >= p) {
        sum -= p;
        tail = mul_from(data_.power[i], tail, i + 1);
    }
    result[i] = static_cast<std::uint8_t>(sum);
    Element yrest{};
    bool yrest_trivial = true;
    for (int k = i + 1; k < n; ++k) {
        yrest[k] = y[k];
        if (y[k]) yrest_trivial = false;
    }
    if (!yrest_trivial) tail = mul_from(tail, yrest, i + 1);
    for (int k = i + 1; k < n; ++k) result[k] = tail[k];
    return result;
}

Element PcPresentation::multiply(const Element& x, const Element& y) const { return mul_from(x, y, 0); }

Element PcPresentation::inverse(const Element& x) const {
    const int n = ngens();
    Element y{}, z = x;
    for (int i = 0; i < n; ++i) {
        if (z[i] == 0) continue;
        Element f{};
        f[i] = static_cast<std::uint8_t>(p() - z[i]);
        z = multiply(z, f);
        y = multiply(y, f);
    }
    return y;
}

Element PcPresentation::power(const Element& x, long long n) const {
    Element base = n < 0 ? inverse(x) : x;
    unsigned long long m = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
    Element r{};
    while (m > 0) {
        if (m & 1) r = multiply(r, base);
        m >>= 1;
        if (m) base = multiply(base, base);
    }
    return r;
}

Element PcPresentation::commutator(const Element& x, const Element& y) const {
    return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

Element PcPresentation::conjugate(const Element& x, const Element& g) const {
    return multiply(multiply(inverse(g), x), g);
}

std::uint64_t PcPresentation::element_order(const Element& x) const {
    std::uint64_t k = 1;
    Element y = x;
    while (!y.is_identity()) {
        y = power(y, p());
        k *= static_cast<std::uint64_t>(p());
    }
    return k;
}

std::uint64_t PcPresentation::code(const Element& x) const {
    std::uint64_t c = 0;
    for (int i = 0; i < ngens(); ++i) c += radix_[i] * x[i];
    return c;
}

Element PcPresentation::decode(std::uint64_t c) const {
    Element x{};
    for (int i = 0; i < ngens(); ++i) {
        x[i] = static_cast<std::uint8_t>(c / radix_[i]);
        c %= radix_[i];
    }
    return x;
}

bool PcPresentation::valid(const Element& x) const {
    for (int k = 0; k < kMaxGens; ++k) {
        if (k >= ngens() && x[k] != 0) return false;
        if (x[k] >= p()) return false;
    }
    return true;
}

std::string PcPresentation::format(const Element& x) const {
    std::string s = "(";
    for (int i = 0; i < ngens(); ++i) {
        if (i) s += ",";
        s += std::to_string(x[i]);
    }
    return s + ")";
}

namespace {

std::string word_of(const Element& x, int n) {
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        if (!s.empty()) s += " ";
        s += "g" + std::to_string(i + 1) + "^" + std::to_string(x[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

std::string PcPresentation::word(const Element& x) const { return word_of(x, ngens()); }

void PcPresentation::check_consistency() const {
    const int n = ngens();
    const int p = this->p();
    auto gen_pow = [&](int i, int e) {
        Element g{};
        g[i] = static_cast<std::uint8_t>(e % p);
        return g;
    };
    auto fail = [&](const std::string& what, const Element& a, const Element& b) {
        throw InconsistentPresentation("inconsistent presentation: overlap " + what + " collects to " + word(a) +
                                       " and to " + word(b));
    };
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < j; ++i) {
                Element gk = generator(k), gj = generator(j), gi = generator(i);
                Element a = multiply(multiply(gk, gj), gi);
                Element b = multiply(gk, multiply(gj, gi));
                if (!(a == b))
                    fail("(g" + std::to_string(k + 1) + " g" + std::to_string(j + 1) + ") g" + std::to_string(i + 1), a,
                         b);
            }
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            Element a = multiply(data_.power[j], generator(i));
            Element b = multiply(gen_pow(j, p - 1), multiply(generator(j), generator(i)));
            if (!(a == b)) fail("(g" + std::to_string(j + 1) + "^p) g" + std::to_string(i + 1), a, b);
            Element c = multiply(generator(j), data_.power[i]);
            Element d = multiply(multiply(generator(j), generator(i)), gen_pow(i, p - 1));
            if (!(c == d)) fail("g" + std::to_string(j + 1) + " (g" + std::to_string(i + 1) + "^p)", c, d);
        }
    for (int i = 0; i < n; ++i) {
        Element a = multiply(generator(i), data_.power[i]);
        Element b = multiply(data_.power[i], generator(i));
        if (!(a == b)) fail("g" + std::to_string(i + 1) + " (g" + std::to_string(i + 1) + "^p)", a, b);
    }
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

long long parse_int(const Token& t, int line) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError(line, t.column, "expected an integer, found '" + t.text + "'");
    return v;
}

Element parse_word(const std::vector<Token>& toks, std::size_t from, int line, int p, int n, int bound) {
    Element w{};
    if (from >= toks.size()) throw ParseError(line, toks.back().column, "missing word after ':'");
    if (toks[from].text == "1") {
        if (from + 1 != toks.size()) throw ParseError(line, toks[from + 1].column, "unexpected token after '1'");
        return w;
    }
    int last = -1;
    for (std::size_t t = from; t < toks.size(); ++t) {
        const auto& tok = toks[t];
        const auto caret = tok.text.find('^');
        if (tok.text.size() < 2 || tok.text[0] != 'g' || caret == std::string::npos)
            throw ParseError(line, tok.column, "expected a factor of the form gK^e, found '" + tok.text + "'");
        long long k = parse_int({tok.text.substr(1, caret - 1), tok.column + 1}, line);
        long long e = parse_int({tok.text.substr(caret + 1), tok.column + static_cast<int>(caret) + 1}, line);
        if (k < 1 || k > n) throw ParseError(line, tok.column, "generator index out of range: g" + std::to_string(k));
        if (e < 0 || e >= p)
            throw ParseError(line, tok.column + static_cast<int>(caret) + 1,
                             "exponent out of range [0," + std::to_string(p) + "): " + std::to_string(e));
        if (k <= bound)
            throw ParseError(line, tok.column, "relation referencing earlier-or-equal generators: g" + std::to_string(k));
        if (k <= last) throw ParseError(line, tok.column, "word not in normal form: generator indices must increase");
        last = static_cast<int>(k);
        w[static_cast<std::size_t>(k - 1)] = static_cast<std::uint8_t>(e);
    }
    return w;
}

}  // namespace

PresentationData parse_presentation_data(const std::string& text) {
    PresentationData d;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    int stage = 0;
    std::set<std::pair<int, int>> seen_comm;
    std::set<int> seen_pow;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::string c = line.substr(hash + 1);
            if (!c.empty() && c[0] == ' ') c.erase(0, 1);
            if (hash == 0 || line.find_first_not_of(" \t") == hash) d.comments.push_back(c);
            line = line.substr(0, hash);
        }
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;
        if (stage == 0) {
            if (kw != "p" || toks.size() != 2) throw ParseError(lineno, toks[0].column, "expected 'p <prime>'");
            long long p = parse_int(toks[1], lineno);
            if (p < 2 || p > 251 || !is_prime(static_cast<std::uint64_t>(p)))
                throw ParseError(lineno, toks[1].column, "modulus is not a prime below 256: " + toks[1].text);
            d.p = static_cast<int>(p);
            stage = 1;
            continue;
        }
        if (stage == 1) {
            if (kw != "gens" || toks.size() != 2) throw ParseError(lineno, toks[0].column, "expected 'gens <n>'");
            long long n = parse_int(toks[1], lineno);
            if (n < 0 || n > kMaxGens)
                throw ParseError(lineno, toks[1].column, "number of generators out of range: " + toks[1].text);
            d.ngens = static_cast<int>(n);
            d.power.assign(static_cast<std::size_t>(n), Element{});
            d.comm.assign(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
            stage = 2;
            continue;
        }
        if (kw == "pow") {
            if (toks.size() < 4 || toks[2].text != ":")
                throw ParseError(lineno, toks[0].column, "expected 'pow i : word'");
            long long i = parse_int(toks[1], lineno);
            if (i < 1 || i > d.ngens) throw ParseError(lineno, toks[1].column, "generator index out of range");
            if (!seen_pow.insert(static_cast<int>(i)).second)
                throw ParseError(lineno, toks[0].column, "duplicate power relation for g" + std::to_string(i));
            d.power[i - 1] = parse_word(toks, 3, lineno, d.p, d.ngens, static_cast<int>(i));
        } else if (kw == "comm") {
            if (toks.size() < 5 || toks[3].text != ":")
                throw ParseError(lineno, toks[0].column, "expected 'comm j i : word'");
            long long j = parse_int(toks[1], lineno);
            long long i = parse_int(toks[2], lineno);
            if (j < 1 || j > d.ngens) throw ParseError(lineno, toks[1].column, "generator index out of range");
            if (i < 1 || i > d.ngens) throw ParseError(lineno, toks[2].column, "generator index out of range");
            if (j <= i)
                throw ParseError(lineno, toks[1].column,
                                 "relation referencing earlier-or-equal generators: comm " + toks[1].text + " " +
                                     toks[2].text + " needs j > i");
            if (!seen_comm.insert({static_cast<int>(j), static_cast<int>(i)}).second)
                throw ParseError(lineno, toks[0].column, "duplicate commutator relation");
            d.comm[j - 1][i - 1] = parse_word(toks, 4, lineno, d.p, d.ngens, static_cast<int>(j));
        } else if (kw == "id") {
            if (toks.size() != 3) throw ParseError(lineno, toks[0].column, "expected 'id <order> <number>'");
            d.id = SmallGroupId{static_cast<std::uint64_t>(parse_int(toks[1], lineno)),
                                static_cast<std::uint64_t>(parse_int(toks[2], lineno))};
        } else if (kw == "expect") {
            if (toks.size() < 3) throw ParseError(lineno, toks[0].column, "expected 'expect <key> <value>'");
            std::string value = line.substr(static_cast<std::size_t>(toks[2].column - 1));
            while (!value.empty() && (value.back() == ' ' || value.back() == '\t' || value.back() == '\r'))
                value.pop_back();
            d.expect.emplace_back(toks[1].text, value);
        } else {
            throw ParseError(lineno, toks[0].column, "unknown directive '" + kw + "'");
        }
    }
    if (stage < 2) throw ParseError(lineno + 1, 1, stage == 0 ? "missing 'p <prime>' line" : "missing 'gens <n>' line");
    return d;
}

PcGroupPtr parse_presentation(const std::string& text) {
    PresentationData d = parse_presentation_data(text);
    if (d.id && d.ngens > 0) {
        std::uint64_t order = 1;
        for (int i = 0; i < d.ngens; ++i) order *= static_cast<std::uint64_t>(d.p);
        if (order != d.id->order)
            throw ParseError(0, 0,
                             "declared order " + std::to_string(d.id->order) + " differs from p^n = " +
                                 std::to_string(order));
    }
    return PcPresentation::create(std::move(d));
}

std::string format_presentation(const PresentationData& d) {
    std::ostringstream out;
    for (const auto& c : d.comments) out << "# " << c << "\n";
    out << "p " << d.p << "\n";
    out << "gens " << d.ngens << "\n";
    for (int i = 0; i < d.ngens; ++i)
        if (i < static_cast<int>(d.power.size()) && !d.power[i].is_identity())
            out << "pow " << i + 1 << " : " << word_of(d.power[i], d.ngens) << "\n";
    for (int j = 0; j < d.ngens; ++j)
        for (int i = 0; i < j; ++i)
            if (j < static_cast<int>(d.comm.size()) && !d.comm[j][i].is_identity())
                out << "comm " << j + 1 << " " << i + 1 << " : " << word_of(d.comm[j][i], d.ngens) << "\n";
    if (d.id) out << "id " << d.id->order << " " << d.id->number << "\n";
    for (const auto& [k, v] : d.expect) out << "expect " << k << " " << v << "\n";
    return out.str();
}

Element multiply(const PcPresentation& G, const Element& x, const Element& y) { return G.multiply(x, y); }
Element inverse(const PcPresentation& G, const Element& x) { return G.inverse(x); }
Element power(const PcPresentation& G, const Element& x, long long n) { return G.power(x, n); }
Element commutator(const PcPresentation& G, const Element& x, const Element& y) { return G.commutator(x, y); }
std::uint64_t element_order(const PcPresentation& G, const Element& x) { return G.element_order(x); }

}  // namespace lienil
