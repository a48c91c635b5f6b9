#include "affinejt/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace affinejt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must weakly decrease");
    }
}

Partition Partition::rectangle(int k, int r) {
    if (k == 0 || r == 0) return Partition();
    return Partition(std::vector<int>(r, k));
}

long Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

int Partition::mult(int i) const {
    int c = 0;
    for (int p : parts_)
        if (p == i) ++c;
    return c;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

Partition Partition::odd_sub() const {
    std::vector<int> o;
    for (int p : parts_)
        if (p % 2 == 1) o.push_back(p);
    return Partition(std::move(o));
}

bool Partition::is_even() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

bool Partition::contains(const Partition& mu) const {
    for (std::size_t i = 0; i < mu.parts_.size(); ++i)
        if (mu.parts_[i] > part(i)) return false;
    return true;
}

bool Partition::interlaces_under(const Partition& la) const {
    // la_1 >= mu_1 >= la_2 >= mu_2 >= ...
    std::size_t n = std::max(parts_.size(), la.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (part(i) > la.part(i)) return false;
        if (la.part(i + 1) > part(i)) return false;
    }
    return true;
}

bool Partition::vertical_strip_to(const Partition& la) const {
    if (!la.contains(*this)) return false;
    for (std::size_t i = 0; i < la.parts_.size(); ++i)
        if (la.part(i) - part(i) > 1) return false;
    return true;
}

bool Partition::operator<(const Partition& o) const {
    long a = size(), b = o.size();
    if (a != b) return a < b;
    return parts_ > o.parts_;  // lex descending within a grade
}

std::string Partition::serialize() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    if (s.empty() || s == "-") return Partition();
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
    return Partition(std::move(parts));
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int v : parts)
        if (v < 0) throw std::invalid_argument("Composition: negative entry");
}

long Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

bool PartitionFilter::admits(const Partition& la) const {
    if (max_part && la.part(0) > *max_part) return false;
    if (max_length && la.length() > *max_length) return false;
    if (exact_size && la.size() != *exact_size) return false;
    if (even_only && !la.is_even()) return false;
    if (odd_parts_even_mult)
        for (int p : la.parts())
            if (p % 2 == 1 && la.mult(p) % 2 == 1) return false;
    if (parts_lt_bound_even_mult)
        for (int p : la.parts())
            if (p < *parts_lt_bound_even_mult && la.mult(p) % 2 == 1) return false;
    return true;
}

namespace {

// partitions of m with bounded largest part, lex descending
void rec_partitions(long m, int maxp, std::vector<int>& acc,
                    const std::function<void(const Partition&)>& emit) {
    if (m == 0) {
        emit(Partition(acc));
        return;
    }
    for (int p = static_cast<int>(std::min<long>(maxp, m)); p >= 1; --p) {
        acc.push_back(p);
        rec_partitions(m - p, p, acc, emit);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(long m, int max_part, int max_length) {
    std::vector<Partition> out;
    if (m < 0) return out;
    int mp = max_part < 0 ? static_cast<int>(m) : max_part;
    std::vector<int> acc;
    rec_partitions(m, mp, acc, [&](const Partition& la) {
        if (max_length < 0 || la.length() <= max_length) out.push_back(la);
    });
    return out;
}

void for_each_partition(const PartitionFilter& f,
                        const std::function<void(const Partition&)>& emit) {
    long max_size;
    if (f.exact_size) {
        max_size = *f.exact_size;
    } else if (f.max_part && f.max_length) {
        max_size = static_cast<long>(*f.max_part) * (*f.max_length);
    } else {
        throw std::domain_error(
            "for_each_partition: filter admits infinitely many partitions");
    }
    long lo = f.exact_size ? *f.exact_size : 0;
    for (long m = lo; m <= max_size; ++m)
        for (const Partition& la :
             partitions_of(m, f.max_part.value_or(-1), f.max_length.value_or(-1)))
            if (f.admits(la)) emit(la);
}

std::vector<Partition> enumerate_partitions(const PartitionFilter& f) {
    std::vector<Partition> out;
    for_each_partition(f, [&](const Partition& la) { out.push_back(la); });
    return out;
}

PartitionStream::PartitionStream(PartitionFilter f) : filter_(std::move(f)) {
    if (filter_.exact_size) {
        cur_size_ = *filter_.exact_size;
        max_size_ = cur_size_;
    } else if (filter_.max_part && filter_.max_length) {
        cur_size_ = 0;
        max_size_ = static_cast<long>(*filter_.max_part) * (*filter_.max_length);
    } else {
        throw std::domain_error("PartitionStream: filter admits infinitely many partitions");
    }
    refill();
}

void PartitionStream::refill() {
    bucket_.clear();
    pos_ = 0;
    while (bucket_.empty() && cur_size_ <= max_size_) {
        for (const Partition& la : partitions_of(cur_size_, filter_.max_part.value_or(-1),
                                                 filter_.max_length.value_or(-1)))
            if (filter_.admits(la)) bucket_.push_back(la);
        ++cur_size_;
    }
}

std::optional<Partition> PartitionStream::next() {
    if (pos_ < bucket_.size()) return bucket_[pos_++];
    if (cur_size_ > max_size_) return std::nullopt;
    refill();
    if (pos_ < bucket_.size()) return bucket_[pos_++];
    return std::nullopt;
}

std::vector<int> Tableau::weight(int n) const {
    std::vector<int> w(n, 0);
    for (const auto& row : rows)
        for (int v : row) {
            if (v < 1 || v > n) throw std::out_of_range("Tableau::weight: entry out of range");
            ++w[v - 1];
        }
    return w;
}

namespace {

// Backtracking over cells in row-major order. entry(i,j) occupies column j
// (0-based, j in [inner_i, shape_i)).
struct SsytEnum {
    const Partition& shape;
    const Partition& inner;
    int n;
    const std::function<void(const Tableau&)>& emit;
    std::vector<std::vector<int>> rows;  // rows[i][j - inner_i]

    int entry(int i, int j) const {
        int off = inner.part(i);
        if (j < off || j >= shape.part(i)) return 0;
        return rows[i][j - off];
    }

    void run(int i, int j) {
        if (i == shape.length()) {
            emit(Tableau{shape, inner, rows});
            return;
        }
        if (j >= shape.part(i)) {
            run(i + 1, inner.part(i + 1));
            return;
        }
        int lo = 1;
        if (j > inner.part(i)) lo = std::max(lo, entry(i, j - 1));           // row weakly increases
        if (i > 0) {
            int above = entry(i - 1, j);
            if (above > 0) lo = std::max(lo, above + 1);                     // column strictly increases
        }
        for (int v = lo; v <= n; ++v) {
            rows[i][j - inner.part(i)] = v;
            run(i, j + 1);
        }
        rows[i][j - inner.part(i)] = 0;
    }
};

}  // namespace

void for_each_ssyt(const Partition& shape, const Partition& inner, int n,
                   const std::function<void(const Tableau&)>& emit) {
    if (!shape.contains(inner))
        throw std::invalid_argument("for_each_ssyt: inner shape not contained in outer shape");
    if (n < 0) throw std::invalid_argument("for_each_ssyt: negative alphabet");
    if (shape == inner) {
        emit(Tableau{shape, inner, std::vector<std::vector<int>>(shape.length())});
        return;
    }
    if (n == 0) return;
    std::vector<std::vector<int>> rows(shape.length());
    for (int i = 0; i < shape.length(); ++i)
        rows[i].assign(shape.part(i) - inner.part(i), 0);
    SsytEnum e{shape, inner, n, emit, std::move(rows)};
    e.run(0, inner.part(0));
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& inner, int n) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, inner, n, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

bool in_cylindric_domain(const Partition& la, int n, int k, int l) {
    if (la.length() > n || la.part(0) > k) return false;
    Partition c = la.conjugate();
    return c.part(0) - c.part(k - 1) <= l;
}

bool is_cylindric(const Tableau& t, int n, int k, int l) {
    // Doubled diagram: row i (1-based, 1..n+l) carries the translate's row i
    // in columns k+1..k+la_i and the original's row i-l in columns 1..la_{i-l}.
    const Partition& la = t.shape;
    auto orig = [&](int r, int c) -> int {  // 1-based row/col of T, 0 if outside
        if (r < 1 || r > la.length()) return 0;
        if (c < 1 || c > la.part(r - 1)) return 0;
        return t.rows[r - 1][c - 1];
    };
    auto doubled = [&](int r, int c) -> int {  // 1-based row/col of the union
        if (c > k) {
            int v = orig(r, c - k);
            if (v) return v;
        }
        return orig(r - l, c);
    };
    int height = la.length() + l;
    int width = k + la.part(0);
    for (int r = 1; r <= height; ++r) {
        for (int c = 1; c <= width; ++c) {
            int v = doubled(r, c);
            if (!v) continue;
            int right = doubled(r, c + 1);
            if (right && right < v) return false;
            int below = doubled(r + 1, c);
            if (below && below <= v) return false;
        }
    }
    (void)n;
    return true;
}

void for_each_cssyt(const Partition& la, int n, int k, int l,
                    const std::function<void(const Tableau&)>& emit) {
    if (!in_cylindric_domain(la, n, k, l))
        throw std::invalid_argument("for_each_cssyt: shape outside the cylindric domain");
    for_each_ssyt(la, Partition(), n, [&](const Tableau& t) {
        if (is_cylindric(t, n, k, l)) emit(t);
    });
}

std::vector<Tableau> enumerate_cssyt(const Partition& la, int n, int k, int l) {
    std::vector<Tableau> out;
    for_each_cssyt(la, n, k, l, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

}  // namespace affinejt
