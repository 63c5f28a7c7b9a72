// Shared vocabulary: element indices, operation tables, subset masks and
// validation reports. Every structure in the library is a finite set of
// densely indexed elements 0..n-1 together with tables over those indices.

#ifndef DIRING_CORE_HPP_
#define DIRING_CORE_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace diring {

  using Elem = std::uint16_t;

  // Subset masks are 64-bit words, which bounds the order of any structure.
  inline constexpr std::size_t kMaxOrder = 64;
  // Lattice work (subgroups, ideals, submodules) is limited to this order.
  inline constexpr std::size_t kLatticeCap = 24;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  // Raised when two independent computations of the same quantity disagree,
  // or when a proven identity fails on a validated structure.
  class InvariantViolation : public Error {
   public:
    using Error::Error;
  };

  inline void require_cap(std::size_t n, std::size_t cap, std::string_view what) {
    if (n > cap) {
      throw CapExceeded(std::string(what) + ": order " + std::to_string(n)
                        + " exceeds cap " + std::to_string(cap));
    }
  }

  // Dense row-major table of element indices.
  class Table {
   public:
    Table() = default;
    Table(std::size_t rows, std::size_t cols, Elem fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Elem operator()(std::size_t r, std::size_t c) const noexcept {
      return data_[r * cols_ + c];
    }
    Elem& operator()(std::size_t r, std::size_t c) noexcept {
      return data_[r * cols_ + c];
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::span<Elem const> data() const noexcept { return data_; }
    std::span<Elem const> row(std::size_t r) const noexcept {
      return std::span<Elem const>(data_).subspan(r * cols_, cols_);
    }

    friend bool operator==(Table const&, Table const&) = default;

   private:
    std::size_t       rows_ = 0;
    std::size_t       cols_ = 0;
    std::vector<Elem> data_;
  };

  // A subset of the elements of a structure of order size().
  class SubsetMask {
   public:
    SubsetMask() = default;
    explicit SubsetMask(std::size_t n, std::uint64_t bits = 0)
        : bits_(bits), size_(static_cast<std::uint32_t>(n)) {
      require_cap(n, kMaxOrder, "SubsetMask");
      bits_ &= universe_bits();
    }

    static SubsetMask full(std::size_t n) {
      SubsetMask m(n);
      m.bits_ = m.universe_bits();
      return m;
    }
    static SubsetMask singleton(std::size_t n, Elem x) {
      SubsetMask m(n);
      m.insert(x);
      return m;
    }
    static SubsetMask of(std::size_t n, std::initializer_list<Elem> xs) {
      SubsetMask m(n);
      for (Elem x : xs) {
        m.insert(x);
      }
      return m;
    }
    template <typename Range>
    static SubsetMask of_range(std::size_t n, Range const& xs) {
      SubsetMask m(n);
      for (auto x : xs) {
        m.insert(static_cast<Elem>(x));
      }
      return m;
    }

    std::size_t   size() const noexcept { return size_; }
    std::uint64_t bits() const noexcept { return bits_; }
    std::size_t   count() const noexcept { return std::popcount(bits_); }
    bool          empty() const noexcept { return bits_ == 0; }
    bool          is_full() const noexcept { return bits_ == universe_bits(); }

    bool contains(Elem x) const noexcept {
      return x < size_ && ((bits_ >> x) & 1U) != 0;
    }
    void insert(Elem x) {
      check_index(x);
      bits_ |= std::uint64_t{1} << x;
    }
    void erase(Elem x) {
      check_index(x);
      bits_ &= ~(std::uint64_t{1} << x);
    }

    bool subset_of(SubsetMask const& other) const {
      check_same(other);
      return (bits_ & ~other.bits_) == 0;
    }

    std::vector<Elem> elements() const {
      std::vector<Elem> out;
      out.reserve(count());
      for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
        out.push_back(static_cast<Elem>(std::countr_zero(b)));
      }
      return out;
    }

    // Least element, if any.
    std::optional<Elem> first() const noexcept {
      if (bits_ == 0) {
        return std::nullopt;
      }
      return static_cast<Elem>(std::countr_zero(bits_));
    }

    SubsetMask operator&(SubsetMask const& o) const {
      check_same(o);
      return SubsetMask(size_, bits_ & o.bits_);
    }
    SubsetMask operator|(SubsetMask const& o) const {
      check_same(o);
      return SubsetMask(size_, bits_ | o.bits_);
    }
    SubsetMask complement() const {
      return SubsetMask(size_, ~bits_);
    }

    friend bool operator==(SubsetMask const&, SubsetMask const&) = default;

    // Deterministic order used for every list of masks: by cardinality, then
    // lexicographically on the sorted element lists.
    friend bool operator<(SubsetMask const& a, SubsetMask const& b) {
      if (a.size_ != b.size_) {
        return a.size_ < b.size_;
      }
      auto const ca = a.count();
      auto const cb = b.count();
      if (ca != cb) {
        return ca < cb;
      }
      std::uint64_t const diff = a.bits_ ^ b.bits_;
      if (diff == 0) {
        return false;
      }
      std::uint64_t const low = diff & (~diff + 1);
      return (a.bits_ & low) != 0;
    }

   private:
    std::uint64_t universe_bits() const noexcept {
      return size_ >= 64 ? ~std::uint64_t{0}
                         : (std::uint64_t{1} << size_) - 1;
    }
    void check_index(Elem x) const {
      if (x >= size_) {
        throw Error("SubsetMask: element index " + std::to_string(x)
                    + " out of range for order " + std::to_string(size_));
      }
    }
    void check_same(SubsetMask const& o) const {
      if (o.size_ != size_) {
        throw Error("SubsetMask: masks over structures of different order");
      }
    }

    std::uint64_t bits_ = 0;
    std::uint32_t size_ = 0;
  };

  struct Violation {
    std::string       axiom;
    std::vector<Elem> witness;
    std::string       message;
  };

  // Outcome of an axiom scan or a proposition check. ok() iff no violations.
  class ValidationReport {
   public:
    bool ok() const noexcept { return violations_.empty(); }
    explicit operator bool() const noexcept { return ok(); }

    void add(std::string axiom, std::vector<Elem> witness, std::string message) {
      violations_.push_back(
          Violation{std::move(axiom), std::move(witness), std::move(message)});
    }
    void add(Violation v) { violations_.push_back(std::move(v)); }

    void merge(ValidationReport const& other, std::string_view prefix = {}) {
      for (auto const& v : other.violations_) {
        Violation copy = v;
        if (!prefix.empty()) {
          copy.axiom = std::string(prefix) + "/" + copy.axiom;
        }
        violations_.push_back(std::move(copy));
      }
    }

    bool has(std::string_view axiom) const {
      for (auto const& v : violations_) {
        if (v.axiom == axiom) {
          return true;
        }
      }
      return false;
    }

    std::vector<Violation> const& violations() const noexcept {
      return violations_;
    }

    std::string str() const {
      if (ok()) {
        return "ok";
      }
      std::ostringstream os;
      for (auto const& v : violations_) {
        os << v.axiom << ": " << v.message << '\n';
      }
      return os.str();
    }

   private:
    std::vector<Violation> violations_;
  };

  // Either a validated value or the report explaining why validation failed.
  template <typename T>
  class Checked {
   public:
    Checked(T value) : value_(std::move(value)) {}  // NOLINT
    Checked(ValidationReport report) : report_(std::move(report)) {  // NOLINT
      if (report_.ok()) {
        throw Error("Checked: failure constructed from an empty report");
      }
    }

    bool ok() const noexcept { return value_.has_value(); }
    explicit operator bool() const noexcept { return ok(); }

    T const& value() const& {
      if (!value_) {
        throw Error("validation failed:\n" + report_.str());
      }
      return *value_;
    }
    T&& value() && {
      if (!value_) {
        throw Error("validation failed:\n" + report_.str());
      }
      return std::move(*value_);
    }

    ValidationReport const& report() const noexcept { return report_; }

   private:
    std::optional<T> value_;
    ValidationReport report_;
  };

}  // namespace diring

#endif  // DIRING_CORE_HPP_
