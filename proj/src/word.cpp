// word.cpp -- ternary words and square detection

#include "brinkhuis/word.hpp"

#include "brinkhuis/errors.hpp"

#include <algorithm>
#include <cstring>
#include <fmt/format.h>

namespace brinkhuis {

Word::Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols))
{
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] > 2)
            throw InvalidSymbol(fmt::format("symbol {} at position {} is not a trit",
                                            int(symbols_[i]), i),
                                0, i + 1);
    }
}

Word make_word_unchecked(std::vector<Symbol> symbols)
{
    return Word(Word::Unchecked{}, std::move(symbols));
}

Word Word::parse(std::string_view text)
{
    std::vector<Symbol> out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == ' ' || c == '\t')
            continue;
        if (c < '0' || c > '2')
            throw InvalidSymbol(fmt::format("invalid character '{}' at column {}", c, i + 1),
                                0, i + 1);
        out.push_back(static_cast<Symbol>(c - '0'));
    }
    return Word(Unchecked{}, std::move(out));
}

std::string Word::str() const
{
    std::string s(symbols_.size(), '0');
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        s[i] = static_cast<char>('0' + symbols_[i]);
    return s;
}

Word operator+(const Word& a, const Word& b)
{
    std::vector<Symbol> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.symbols_.begin(), a.symbols_.end());
    out.insert(out.end(), b.symbols_.begin(), b.symbols_.end());
    return Word(Word::Unchecked{}, std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept
{
    const std::size_t common = std::min(a.size(), b.size());
    if (common != 0) {
        const int c = std::memcmp(a.symbols_.data(), b.symbols_.data(), common);
        if (c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
}

bool witness_holds(SymbolSpan w, const SquareWitness& witness)
{
    if (witness.period == 0 || witness.start + 2 * witness.period > w.size())
        return false;
    return std::equal(w.begin() + witness.start, w.begin() + witness.start + witness.period,
                      w.begin() + witness.start + witness.period);
}

bool is_squarefree_oracle(SymbolSpan w)
{
    const std::size_t n = w.size();
    for (std::size_t start = 0; start < n; ++start)
        for (std::size_t period = 1; start + 2 * period <= n; ++period)
            if (witness_holds(w, {start, period}))
                return false;
    return true;
}

namespace {

constexpr Symbol kSeparator = 3;

std::vector<std::size_t> z_function(const std::vector<Symbol>& s)
{
    const std::size_t n = s.size();
    std::vector<std::size_t> z(n, 0);
    for (std::size_t i = 1, l = 0, r = 0; i < n; ++i) {
        if (i < r)
            z[i] = std::min(r - i, z[i - l]);
        while (i + z[i] < n && s[z[i]] == s[i + z[i]])
            ++z[i];
        if (i + z[i] > r) {
            l = i;
            r = i + z[i];
        }
    }
    return z;
}

std::size_t z_at(const std::vector<std::size_t>& z, std::ptrdiff_t i)
{
    return (i >= 0 && static_cast<std::size_t>(i) < z.size()) ? z[i] : 0;
}

// Main-Lorentz: a square lies in the left half, the right half, or crosses
// the split; crossing squares are found from four Z-arrays.
bool contains_square(SymbolSpan s)
{
    const std::size_t n = s.size();
    if (n <= 1)
        return false;
    if (n == 2)
        return s[0] == s[1];
    const std::size_t nu = n / 2;
    const std::size_t nv = n - nu;
    const SymbolSpan u = s.first(nu);
    const SymbolSpan v = s.subspan(nu);
    if (contains_square(u) || contains_square(v))
        return true;

    std::vector<Symbol> rev_u(u.rbegin(), u.rend());
    std::vector<Symbol> rev_v(v.rbegin(), v.rend());

    std::vector<Symbol> buf;
    const auto z1 = z_function(rev_u);

    buf.assign(v.begin(), v.end());
    buf.push_back(kSeparator);
    buf.insert(buf.end(), u.begin(), u.end());
    const auto z2 = z_function(buf);

    buf = rev_u;
    buf.push_back(kSeparator);
    buf.insert(buf.end(), rev_v.begin(), rev_v.end());
    const auto z3 = z_function(buf);

    const auto z4 = z_function(std::vector<Symbol>(v.begin(), v.end()));

    const auto snu = static_cast<std::ptrdiff_t>(nu);
    const auto snv = static_cast<std::ptrdiff_t>(nv);
    for (std::ptrdiff_t cntr = 0; cntr < static_cast<std::ptrdiff_t>(n); ++cntr) {
        std::ptrdiff_t l, k1, k2;
        bool left;
        if (cntr < snu) {
            l = snu - cntr;
            k1 = static_cast<std::ptrdiff_t>(z_at(z1, snu - cntr));
            k2 = static_cast<std::ptrdiff_t>(z_at(z2, snv + 1 + cntr));
            left = true;
        } else {
            l = cntr - snu + 1;
            k1 = static_cast<std::ptrdiff_t>(z_at(z3, snu + 1 + snv - 1 - (cntr - snu)));
            k2 = static_cast<std::ptrdiff_t>(z_at(z4, (cntr - snu) + 1));
            left = false;
        }
        if (k1 + k2 < l)
            continue;
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(1, l - k2);
        std::ptrdiff_t hi = std::min(l, k1);
        if (left)
            hi = std::min(hi, l - 1);
        if (lo <= hi)
            return true;
    }
    return false;
}

} // namespace

bool is_squarefree(SymbolSpan w)
{
    return !contains_square(w);
}

std::optional<SquareWitness> find_square(SymbolSpan w)
{
    if (is_squarefree(w))
        return std::nullopt;
    const std::size_t n = w.size();
    for (std::size_t start = 0; start < n; ++start)
        for (std::size_t period = 1; start + 2 * period <= n; ++period)
            if (witness_holds(w, {start, period}))
                return SquareWitness{start, period};
    return std::nullopt; // unreachable when the fast test is correct
}

bool has_square_ending_at_last(SymbolSpan w)
{
    const std::size_t n = w.size();
    for (std::size_t p = 1; 2 * p <= n; ++p) {
        std::size_t t = 0;
        while (t < p && w[n - 1 - t] == w[n - 1 - p - t])
            ++t;
        if (t == p)
            return true;
    }
    return false;
}

bool has_square_covering(SymbolSpan w, std::size_t lo, std::size_t hi,
                         std::size_t min_period, std::size_t max_period)
{
    // Any square covering `lo` has the anchor `lo` or `lo - p` in its first
    // half. For an anchor a, the square exists iff the run of positions i with
    // w[i] == w[i+p] around a is long enough and admits a start in range.
    const auto N = static_cast<std::ptrdiff_t>(w.size());
    const auto slo = static_cast<std::ptrdiff_t>(lo);
    const auto shi = static_cast<std::ptrdiff_t>(hi);
    const Symbol* u = w.data();
    for (auto p = static_cast<std::ptrdiff_t>(std::max<std::size_t>(min_period, 1));
         p <= static_cast<std::ptrdiff_t>(max_period) && 2 * p <= N; ++p) {
        // Start range allowed by the covering and bounds constraints alone.
        const std::ptrdiff_t s_min = std::max<std::ptrdiff_t>(0, shi + 1 - 2 * p);
        const std::ptrdiff_t s_max = std::min(slo, N - 2 * p);
        if (s_min > s_max)
            continue;
        for (const std::ptrdiff_t a : {slo, slo - p}) {
            if (a < 0 || a + p >= N)
                continue;
            // s must satisfy s <= a <= s + p - 1
            if (std::max(s_min, a - p + 1) > std::min(s_max, a))
                continue;
            if (u[a] != u[a + p])
                continue;
            std::ptrdiff_t back = 1;
            while (a - back >= 0 && u[a - back] == u[a - back + p])
                ++back;
            std::ptrdiff_t fwd = 1;
            while (a + fwd + p < N && u[a + fwd] == u[a + fwd + p])
                ++fwd;
            const std::ptrdiff_t first = std::max({s_min, a - back + 1, a - p + 1});
            const std::ptrdiff_t last = std::min({s_max, a, a + fwd - p});
            if (first <= last)
                return true;
        }
    }
    return false;
}

Word tau(const Word& w, unsigned power)
{
    std::vector<Symbol> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = tau(w[i], power);
    return make_word_unchecked(std::move(out));
}

Word reverse(const Word& w)
{
    const auto s = w.symbols();
    return make_word_unchecked(std::vector<Symbol>(s.rbegin(), s.rend()));
}

bool is_palindrome(SymbolSpan w)
{
    return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin());
}

} // namespace brinkhuis
