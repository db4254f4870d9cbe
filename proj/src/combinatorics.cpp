#include "motzkin/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace motzkin {

BigInt motzkin_number(int n) {
    if (n < 0) throw std::invalid_argument("motzkin_number: negative index");
    static std::mutex mtx;
    static std::vector<BigInt> cache{1};
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        BigInt v = cache[m - 1];
        for (int i = 0; i <= m - 2; ++i) v += cache[i] * cache[m - 2 - i];
        cache.push_back(v);
    }
    return cache[static_cast<size_t>(n)];
}

BigInt catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: negative index");
    return binomial(2 * n, n) / (n + 1);
}

BigInt m_count(int k, int r) {
    if (k < 0 || r < 0 || r > k) return 0;
    static std::mutex mtx;
    static std::vector<std::vector<BigInt>> rows{{1}};  // rows[k][r]
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(rows.size()) <= k) {
        int n = static_cast<int>(rows.size());
        const auto& prev = rows[n - 1];
        auto at = [&](int j) { return (j < 0 || j >= n) ? BigInt(0) : prev[j]; };
        std::vector<BigInt> row(static_cast<size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) row[j] = at(j - 1) + at(j) + at(j + 1);
        rows.push_back(std::move(row));
    }
    return rows[static_cast<size_t>(k)][static_cast<size_t>(r)];
}

BigInt m_via_temperley_lieb(int k, int r) {
    if (k < 0 || r < 0 || r > k) return 0;
    BigInt total = 0;
    for (int l = 0; l <= (k - r) / 2; ++l) {
        BigInt tl_dim = binomial(r + 2 * l, l) - binomial(r + 2 * l, l - 1);
        total += binomial(k, r + 2 * l) * tl_dim;
    }
    return total;
}

MotzkinPath::MotzkinPath(std::vector<int8_t> steps) : steps_(std::move(steps)) {
    int sum = 0;
    for (int8_t a : steps_) {
        if (a < -1 || a > 1) throw std::invalid_argument("MotzkinPath: step not in {-1,0,1}");
        sum += a;
        if (sum < 0) throw std::invalid_argument("MotzkinPath: negative prefix sum");
    }
}

int MotzkinPath::rank() const {
    int sum = 0;
    for (int8_t a : steps_) sum += a;
    return sum;
}

MotzkinPath MotzkinPath::with_step(int i, int8_t value) const {
    MotzkinPath out(*this);
    out.steps_.at(static_cast<size_t>(i)) = value;
    return out;
}

MotzkinPath MotzkinPath::truncated() const {
    if (steps_.empty()) throw std::invalid_argument("MotzkinPath: truncating empty path");
    MotzkinPath out(*this);
    out.steps_.pop_back();
    return out;
}

bool MotzkinPath::operator<(const MotzkinPath& o) const {
    if (steps_.size() != o.steps_.size()) return steps_.size() < o.steps_.size();
    for (size_t i = steps_.size(); i-- > 0;) {
        if (steps_[i] != o.steps_[i]) return steps_[i] > o.steps_[i];
    }
    return false;
}

std::string MotzkinPath::str() const {
    std::string out = "(";
    for (size_t i = 0; i < steps_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(static_cast<int>(steps_[i]));
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const MotzkinPath& p) { return os << p.str(); }

namespace {

// Emits rank-r paths of length k by recursing on the last step with
// priority +1, 0, -1; this is exactly the cell-basis order.
void build_paths(int k, int r, std::vector<int8_t>& acc, std::vector<MotzkinPath>& out) {
    if (r < 0 || r > k) return;
    if (k == 0) {
        std::vector<int8_t> steps(acc.rbegin(), acc.rend());
        out.emplace_back(std::move(steps));
        return;
    }
    for (int8_t last : {int8_t{1}, int8_t{0}, int8_t{-1}}) {
        acc.push_back(last);
        build_paths(k - 1, r - last, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<MotzkinPath> enumerate_paths(int k, int r) {
    if (k < 0) throw std::invalid_argument("enumerate_paths: negative length");
    std::vector<MotzkinPath> out;
    std::vector<int8_t> acc;
    build_paths(k, r, acc, out);
    return out;
}

std::vector<MotzkinPath> enumerate_paths(int k) {
    std::vector<MotzkinPath> out;
    for (int r = 0; r <= k; ++r) {
        auto part = enumerate_paths(k, r);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

bool OneFactor::is_white(int v) const {
    return std::binary_search(whites.begin(), whites.end(), v);
}

void OneFactor::validate() const {
    std::vector<int> seen(static_cast<size_t>(k) + 1, 0);
    for (int w : whites) {
        if (w < 1 || w > k) throw std::invalid_argument("OneFactor: white vertex out of range");
        if (seen[w]++) throw std::invalid_argument("OneFactor: repeated vertex");
    }
    if (!std::is_sorted(whites.begin(), whites.end()))
        throw std::invalid_argument("OneFactor: whites not ascending");
    for (auto [i, j] : edges) {
        if (i < 1 || j > k || i >= j)
            throw std::invalid_argument("OneFactor: bad edge endpoints");
        if (seen[i]++ || seen[j]++) throw std::invalid_argument("OneFactor: repeated vertex");
    }
    for (size_t a = 0; a < edges.size(); ++a)
        for (size_t b = a + 1; b < edges.size(); ++b) {
            auto [i1, j1] = edges[a];
            auto [i2, j2] = edges[b];
            bool crossing = (i1 < i2 && i2 < j1 && j1 < j2) || (i2 < i1 && i1 < j2 && j2 < j1);
            if (crossing) throw std::invalid_argument("OneFactor: crossing edges");
        }
    for (auto [i, j] : edges)
        for (int w : whites)
            if (i < w && w < j)
                throw std::invalid_argument("OneFactor: white vertex inside an edge");
}

OneFactor path_to_factor(const MotzkinPath& p) {
    const int k = p.length();
    OneFactor f;
    f.k = k;
    std::vector<bool> paired(static_cast<size_t>(k) + 1, false);
    for (int i = 1; i <= k; ++i) {
        if (p.step(i - 1) != 1) continue;
        int sum = 0;
        int match = 0;
        for (int j = i; j <= k; ++j) {
            sum += p.step(j - 1);
            if (sum == 0) { match = j; break; }
        }
        if (match) {
            f.edges.emplace_back(i, match);
            paired[i] = paired[match] = true;
        } else {
            f.whites.push_back(i);
        }
    }
    std::sort(f.edges.begin(), f.edges.end());
    return f;
}

MotzkinPath factor_to_path(const OneFactor& f) {
    f.validate();
    std::vector<int8_t> steps(static_cast<size_t>(f.k), 0);
    for (int w : f.whites) steps[w - 1] = 1;
    for (auto [i, j] : f.edges) {
        steps[i - 1] = 1;
        steps[j - 1] = -1;
    }
    return MotzkinPath(std::move(steps));
}

}  // namespace motzkin
