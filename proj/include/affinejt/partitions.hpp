#ifndef AFFINEJT_PARTITIONS_HPP
#define AFFINEJT_PARTITIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace affinejt {

// Weakly decreasing sequence of positive integers; the empty partition is a
// first-class value.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition rectangle(int k, int r);  // (k^r)

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }  // 0-based
    int length() const { return static_cast<int>(parts_.size()); }
    long size() const;
    int mult(int i) const;  // multiplicity of parts equal to i
    Partition conjugate() const;
    Partition odd_sub() const;        // subpartition of odd parts
    bool is_even() const;             // all parts even
    bool contains(const Partition& mu) const;          // mu subseteq this
    bool interlaces_under(const Partition& la) const;  // this prec la
    // la/this is a vertical strip (equivalently this' prec la')
    bool vertical_strip_to(const Partition& la) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const;  // canonical order: by size, then lex descending

    std::string serialize() const;  // "2,2,1"; empty partition -> "-"
    static Partition parse(const std::string& s);

  private:
    std::vector<int> parts_;
};

struct Composition {
    std::vector<int> parts;  // nonnegative, order significant
    explicit Composition(std::vector<int> p);
    Composition() = default;
    long size() const;
};

struct PartitionFilter {
    std::optional<int> max_part;
    std::optional<int> max_length;
    std::optional<long> exact_size;
    bool even_only = false;
    bool odd_parts_even_mult = false;
    // all parts strictly below this bound have even multiplicity
    std::optional<int> parts_lt_bound_even_mult;

    bool admits(const Partition& la) const;
};

// Emit every partition satisfying the filter exactly once, in canonical
// order (graded by size, then lex descending on parts). Throws when the
// filter leaves the domain infinite.
void for_each_partition(const PartitionFilter& f, const std::function<void(const Partition&)>& emit);
std::vector<Partition> enumerate_partitions(const PartitionFilter& f);
std::vector<Partition> partitions_of(long m, int max_part = -1, int max_length = -1);

// Lazily streaming variant over the same canonical order.
class PartitionStream {
  public:
    explicit PartitionStream(PartitionFilter f);
    std::optional<Partition> next();

  private:
    PartitionFilter filter_;
    long cur_size_ = 0;
    long max_size_ = 0;
    std::vector<Partition> bucket_;
    std::size_t pos_ = 0;
    void refill();
};

// Semistandard Young tableau of (skew) shape shape/inner with entries in
// {1..n}: rows weakly increase, columns strictly increase.
struct Tableau {
    Partition shape;
    Partition inner;
    std::vector<std::vector<int>> rows;  // rows[i] holds entries of row i (outside inner)

    std::vector<int> weight(int n) const;  // alpha_i = number of entries equal to i+1
};

void for_each_ssyt(const Partition& shape, const Partition& inner, int n,
                   const std::function<void(const Tableau&)>& emit);
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& inner, int n);

// lambda in Par_{n,k}^l: lambda subseteq (k^n) and lambda'_1 - lambda'_k <= l
bool in_cylindric_domain(const Partition& la, int n, int k, int l);
// Wrap-around check: the union of T with its translate by (k right, l up)
// stays semistandard.
bool is_cylindric(const Tableau& t, int n, int k, int l);
void for_each_cssyt(const Partition& la, int n, int k, int l,
                    const std::function<void(const Tableau&)>& emit);
std::vector<Tableau> enumerate_cssyt(const Partition& la, int n, int k, int l);

}  // namespace affinejt

#endif
