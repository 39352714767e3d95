#include "cadet/code.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cadet/errors.hpp"

namespace cadet::code {

namespace {

// In-place reduced row echelon form over the field; returns pivot columns.
// Zero rows are dropped.
std::vector<unsigned> rref(const gf::FieldTable& f, std::vector<std::vector<std::uint32_t>>& rows) {
    std::vector<unsigned> pivots;
    const unsigned nu = rows.empty() ? 0 : static_cast<unsigned>(rows[0].size());
    size_t r = 0;
    for (unsigned col = 0; col < nu && r < rows.size(); ++col) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const std::uint32_t s = f.inv(rows[r][col]);
        if (s != 1)
            for (auto& v : rows[r]) v = f.mul(v, s);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const std::uint32_t c = rows[i][col];
            for (unsigned j = 0; j < nu; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[r][j]));
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Basis of {x : M x = 0} for M given as rows over f (columns = n).
std::vector<std::vector<std::uint32_t>> nullspace(const gf::FieldTable& f,
                                                  std::vector<std::vector<std::uint32_t>> m,
                                                  unsigned n) {
    auto pivots = rref(f, m);
    std::vector<char> is_pivot(n, 0);
    for (unsigned p : pivots) is_pivot[p] = 1;
    std::vector<std::vector<std::uint32_t>> basis;
    for (unsigned j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<std::uint32_t> v(n, 0);
        v[j] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m[i][j]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// --- enumeration backends ------------------------------------------------
//
// The message space q^m is walked with one generator-row addition per step
// (Gray order for q = 2, plain counter order with carries otherwise), and
// may be partitioned into disjoint index ranges processed on separate
// threads. Each backend accumulates a weight histogram; an optional
// weight filter collects supports instead.

struct EnumPlan {
    std::uint64_t space;  // q^m
    unsigned threads;
};

EnumPlan plan_enumeration(const gf::FieldTable& f, unsigned m, std::uint64_t budget) {
    std::uint64_t space = 1;
    for (unsigned i = 0; i < m; ++i) {
        space *= f.q();
        if (space > budget)
            throw BudgetError("weight_distribution: q^m = " + std::to_string(space) +
                              "+ codewords exceeds the budget of " + std::to_string(budget));
    }
    unsigned threads = 1;
    if (space >= (1ull << 24)) {
        threads = std::max(1u, std::thread::hardware_concurrency());
        threads = std::min<unsigned>(threads, 8);
    }
    return {space, threads};
}

// q = 2: codewords as packed bit vectors, weight by population count.
class BinaryWalker {
  public:
    BinaryWalker(const std::vector<std::vector<std::uint32_t>>& rows, unsigned nu)
        : nu_(nu), words_((nu + 63) / 64), m_(static_cast<unsigned>(rows.size())) {
        packed_.assign(size_t{m_} * words_, 0);
        for (unsigned i = 0; i < m_; ++i)
            for (unsigned j = 0; j < nu; ++j)
                if (rows[i][j]) packed_[size_t{i} * words_ + j / 64] |= 1ull << (j % 64);
    }

    // Visits messages lo..hi-1 in Gray order; fn(state_words, weight).
    template <class Fn>
    void walk(std::uint64_t lo, std::uint64_t hi, Fn&& fn) const {
        std::vector<std::uint64_t> state(words_, 0);
        const std::uint64_t g = lo ^ (lo >> 1);
        for (unsigned b = 0; b < m_; ++b)
            if (g >> b & 1) xor_row(state, b);
        fn(state, weight(state));
        for (std::uint64_t i = lo + 1; i < hi; ++i) {
            xor_row(state, static_cast<unsigned>(std::countr_zero(i)));
            fn(state, weight(state));
        }
    }

    std::vector<std::uint32_t> support(const std::vector<std::uint64_t>& state) const {
        std::vector<std::uint32_t> s;
        for (unsigned w = 0; w < words_; ++w) {
            std::uint64_t x = state[w];
            while (x) {
                s.push_back(w * 64 + static_cast<unsigned>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return s;
    }

  private:
    void xor_row(std::vector<std::uint64_t>& state, unsigned r) const {
        const std::uint64_t* row = &packed_[size_t{r} * words_];
        for (unsigned w = 0; w < words_; ++w) state[w] ^= row[w];
    }
    unsigned weight(const std::vector<std::uint64_t>& state) const {
        unsigned w = 0;
        for (unsigned i = 0; i < words_; ++i) w += std::popcount(state[i]);
        return w;
    }

    unsigned nu_, words_, m_;
    std::vector<std::uint64_t> packed_;
};

// q = 3: two bit planes per codeword (one_.bit set for symbol 1, two_.bit
// for symbol 2); the per-symbol nonzero mask is their OR.
class TernaryWalker {
  public:
    TernaryWalker(const gf::FieldTable& f, const std::vector<std::vector<std::uint32_t>>& rows,
                  unsigned nu)
        : nu_(nu), words_((nu + 63) / 64), m_(static_cast<unsigned>(rows.size())) {
        (void)f;
        rows1_.assign(size_t{m_} * words_, 0);
        rows2_.assign(size_t{m_} * words_, 0);
        for (unsigned i = 0; i < m_; ++i)
            for (unsigned j = 0; j < nu; ++j) {
                if (rows[i][j] == 1) rows1_[size_t{i} * words_ + j / 64] |= 1ull << (j % 64);
                if (rows[i][j] == 2) rows2_[size_t{i} * words_ + j / 64] |= 1ull << (j % 64);
            }
    }

    struct State {
        std::vector<std::uint64_t> one, two;
        std::vector<unsigned> digits;
    };

    // Counter order: each increment adds one generator row to every digit
    // position that changed (carried digits wrap 2 -> 0, a +1 step mod 3).
    template <class Fn>
    void walk(std::uint64_t lo, std::uint64_t hi, Fn&& fn) const {
        State st;
        st.one.assign(words_, 0);
        st.two.assign(words_, 0);
        st.digits.assign(m_, 0);
        std::uint64_t v = lo;
        for (unsigned d = 0; d < m_; ++d) {
            st.digits[d] = static_cast<unsigned>(v % 3);
            v /= 3;
            for (unsigned rep = 0; rep < st.digits[d]; ++rep) add_row(st, d);
        }
        fn(st, weight(st));
        for (std::uint64_t i = lo + 1; i < hi; ++i) {
            unsigned d = 0;
            while (st.digits[d] == 2) {
                st.digits[d] = 0;
                add_row(st, d);
                ++d;
            }
            st.digits[d]++;
            add_row(st, d);
            fn(st, weight(st));
        }
    }

    std::vector<std::uint32_t> support(const State& st) const {
        std::vector<std::uint32_t> s;
        for (unsigned w = 0; w < words_; ++w) {
            std::uint64_t x = st.one[w] | st.two[w];
            while (x) {
                s.push_back(w * 64 + static_cast<unsigned>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return s;
    }

  private:
    void add_row(State& st, unsigned r) const {
        const std::uint64_t* r1 = &rows1_[size_t{r} * words_];
        const std::uint64_t* r2 = &rows2_[size_t{r} * words_];
        for (unsigned w = 0; w < words_; ++w) {
            const std::uint64_t a1 = st.one[w], a2 = st.two[w];
            const std::uint64_t az = ~(a1 | a2), bz = ~(r1[w] | r2[w]);
            st.one[w] = (a1 & bz) | (r1[w] & az) | (a2 & r2[w]);
            st.two[w] = (a2 & bz) | (r2[w] & az) | (a1 & r1[w]);
        }
    }
    unsigned weight(const State& st) const {
        unsigned w = 0;
        for (unsigned i = 0; i < words_; ++i) w += std::popcount(st.one[i] | st.two[i]);
        return w;
    }

    unsigned nu_, words_, m_;
    std::vector<std::uint64_t> rows1_, rows2_;
};

// Any other field: one symbol per entry, field addition per coordinate.
class GenericWalker {
  public:
    GenericWalker(const gf::FieldTable& f, const std::vector<std::vector<std::uint32_t>>& rows,
                  unsigned nu)
        : f_(f), rows_(rows), nu_(nu), m_(static_cast<unsigned>(rows.size())), q_(static_cast<unsigned>(f.q())) {}

    struct State {
        std::vector<std::uint32_t> symbols;
        std::vector<unsigned> digits;
    };

    // Message digits are element codes; a digit change from o to o+1 adds
    // (code(o+1) - code(o)) * row, which is not constant on non-prime fields.
    template <class Fn>
    void walk(std::uint64_t lo, std::uint64_t hi, Fn&& fn) const {
        State st;
        st.symbols.assign(nu_, 0);
        st.digits.assign(m_, 0);
        std::uint64_t v = lo;
        for (unsigned d = 0; d < m_; ++d) {
            st.digits[d] = static_cast<unsigned>(v % q_);
            v /= q_;
            if (st.digits[d]) add_row(st, d, st.digits[d]);
        }
        fn(st, weight(st));
        for (std::uint64_t i = lo + 1; i < hi; ++i) {
            unsigned d = 0;
            while (st.digits[d] == q_ - 1) {
                add_row(st, d, f_.sub(0, q_ - 1));
                st.digits[d] = 0;
                ++d;
            }
            add_row(st, d, f_.sub(st.digits[d] + 1, st.digits[d]));
            st.digits[d]++;
            fn(st, weight(st));
        }
    }

    std::vector<std::uint32_t> support(const State& st) const {
        std::vector<std::uint32_t> s;
        for (unsigned j = 0; j < nu_; ++j)
            if (st.symbols[j]) s.push_back(j);
        return s;
    }

  private:
    void add_row(State& st, unsigned r, std::uint32_t scale) const {
        for (unsigned j = 0; j < nu_; ++j)
            st.symbols[j] = f_.add(st.symbols[j], f_.mul(scale, rows_[r][j]));
    }
    unsigned weight(const State& st) const {
        unsigned w = 0;
        for (unsigned j = 0; j < nu_; ++j) w += st.symbols[j] != 0;
        return w;
    }

    const gf::FieldTable& f_;
    const std::vector<std::vector<std::uint32_t>>& rows_;
    unsigned nu_, m_, q_;
};

template <class Walker>
std::vector<std::uint64_t> histogram_with(const Walker& walker, unsigned nu, const EnumPlan& plan) {
    std::vector<std::vector<std::uint64_t>> partial(plan.threads, std::vector<std::uint64_t>(nu + 1, 0));
    auto run = [&](unsigned tid) {
        const std::uint64_t lo = plan.space / plan.threads * tid;
        const std::uint64_t hi = tid + 1 == plan.threads ? plan.space : plan.space / plan.threads * (tid + 1);
        auto& h = partial[tid];
        walker.walk(lo, hi, [&](const auto&, unsigned w) { h[w]++; });
    };
    if (plan.threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < plan.threads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }
    for (unsigned t = 1; t < plan.threads; ++t)
        for (unsigned i = 0; i <= nu; ++i) partial[0][i] += partial[t][i];
    return partial[0];
}

template <class Walker>
std::vector<std::vector<std::uint32_t>> supports_with(const Walker& walker, unsigned w,
                                                      const EnumPlan& plan) {
    std::vector<std::vector<std::uint32_t>> out;
    walker.walk(0, plan.space, [&](const auto& st, unsigned wt) {
        if (wt == w) out.push_back(walker.support(st));
    });
    return out;
}

}  // namespace

Int WeightDistribution::total() const {
    Int s = 0;
    for (const Int& c : counts) s += c;
    return s;
}

unsigned WeightDistribution::min_positive_weight() const {
    for (unsigned i = 1; i < counts.size(); ++i)
        if (counts[i] > 0) return i;
    return 0;
}

std::string WeightDistribution::enumerator() const {
    std::ostringstream out;
    bool first = true;
    for (unsigned i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0) {
            out << counts[i];
            continue;
        }
        if (counts[i] != 1) out << counts[i];
        out << "z^" << i;
    }
    if (first) out << "0";
    return out.str();
}

LinearCode LinearCode::from_rows(gf::FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows) {
    if (!field) throw std::invalid_argument("from_rows: null field");
    if (rows.empty()) throw std::invalid_argument("from_rows: no rows given");
    const size_t nu = rows[0].size();
    if (nu == 0) throw std::invalid_argument("from_rows: zero-length rows");
    for (const auto& r : rows) {
        if (r.size() != nu) throw std::invalid_argument("from_rows: ragged rows");
        for (auto v : r)
            if (v >= field->q()) throw std::invalid_argument("from_rows: element code out of range");
    }
    LinearCode c;
    c.field_ = std::move(field);
    c.nu_ = static_cast<unsigned>(nu);
    c.rows_ = rows;
    rref(*c.field_, c.rows_);
    return c;
}

WeightDistribution LinearCode::weight_distribution(std::uint64_t budget) const {
    const auto plan = plan_enumeration(*field_, dimension(), budget);
    std::vector<std::uint64_t> h;
    if (field_->q() == 2) {
        h = histogram_with(BinaryWalker(rows_, nu_), nu_, plan);
    } else if (field_->q() == 3) {
        h = histogram_with(TernaryWalker(*field_, rows_, nu_), nu_, plan);
    } else {
        h = histogram_with(GenericWalker(*field_, rows_, nu_), nu_, plan);
    }
    WeightDistribution wd;
    wd.nu = nu_;
    wd.counts.assign(h.begin(), h.end());
    return wd;
}

unsigned LinearCode::minimum_distance(std::uint64_t budget) const {
    return weight_distribution(budget).min_positive_weight();
}

LinearCode LinearCode::dual() const {
    auto basis = nullspace(*field_, rows_, nu_);
    if (basis.empty()) basis.push_back(std::vector<std::uint32_t>(nu_, 0));  // zero code
    LinearCode d;
    d.field_ = field_;
    d.nu_ = nu_;
    d.rows_ = std::move(basis);
    rref(*field_, d.rows_);
    return d;
}

LinearCode LinearCode::shortened(std::vector<unsigned> coords) const {
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    for (unsigned t : coords)
        if (t >= nu_) throw std::invalid_argument("shortened: coordinate out of range");
    // Messages u with u.G zero on T, i.e. the nullspace of the |T| x m
    // matrix of generator columns at T.
    std::vector<std::vector<std::uint32_t>> cols(coords.size(),
                                                 std::vector<std::uint32_t>(dimension(), 0));
    for (size_t k = 0; k < coords.size(); ++k)
        for (unsigned i = 0; i < dimension(); ++i) cols[k][i] = rows_[i][coords[k]];
    std::vector<std::vector<std::uint32_t>> msgs;
    if (coords.empty()) {
        for (unsigned i = 0; i < dimension(); ++i) {
            std::vector<std::uint32_t> e(dimension(), 0);
            e[i] = 1;
            msgs.push_back(std::move(e));
        }
    } else {
        msgs = nullspace(*field_, cols, dimension());
    }

    std::vector<char> drop(nu_, 0);
    for (unsigned t : coords) drop[t] = 1;
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& u : msgs) {
        std::vector<std::uint32_t> w(nu_, 0);
        for (unsigned i = 0; i < dimension(); ++i) {
            if (u[i] == 0) continue;
            for (unsigned j = 0; j < nu_; ++j)
                w[j] = field_->add(w[j], field_->mul(u[i], rows_[i][j]));
        }
        std::vector<std::uint32_t> v;
        v.reserve(nu_ - coords.size());
        for (unsigned j = 0; j < nu_; ++j)
            if (!drop[j]) v.push_back(w[j]);
        out.push_back(std::move(v));
    }
    if (out.empty()) out.push_back(std::vector<std::uint32_t>(nu_ - coords.size(), 0));

    LinearCode c;
    c.field_ = field_;
    c.nu_ = nu_ - static_cast<unsigned>(coords.size());
    if (c.nu_ == 0) throw std::invalid_argument("shortened: all coordinates removed");
    c.rows_ = std::move(out);
    rref(*field_, c.rows_);
    return c;
}

LinearCode LinearCode::punctured(std::vector<unsigned> coords) const {
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    for (unsigned t : coords)
        if (t >= nu_) throw std::invalid_argument("punctured: coordinate out of range");
    std::vector<char> drop(nu_, 0);
    for (unsigned t : coords) drop[t] = 1;
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& r : rows_) {
        std::vector<std::uint32_t> v;
        v.reserve(nu_ - coords.size());
        for (unsigned j = 0; j < nu_; ++j)
            if (!drop[j]) v.push_back(r[j]);
        out.push_back(std::move(v));
    }
    if (out.empty()) out.push_back(std::vector<std::uint32_t>(nu_ - coords.size(), 0));
    LinearCode c;
    c.field_ = field_;
    c.nu_ = nu_ - static_cast<unsigned>(coords.size());
    if (c.nu_ == 0) throw std::invalid_argument("punctured: all coordinates removed");
    c.rows_ = std::move(out);
    rref(*field_, c.rows_);
    return c;
}

std::vector<std::vector<std::uint32_t>> LinearCode::supports_of_weight(unsigned w,
                                                                       std::uint64_t budget) const {
    const auto plan = plan_enumeration(*field_, dimension(), budget);
    if (field_->q() == 2) return supports_with(BinaryWalker(rows_, nu_), w, plan);
    if (field_->q() == 3) return supports_with(TernaryWalker(*field_, rows_, nu_), w, plan);
    return supports_with(GenericWalker(*field_, rows_, nu_), w, plan);
}

std::string LinearCode::to_text() const {
    std::ostringstream out;
    out << field_->q() << ' ' << nu_ << ' ' << dimension() << '\n';
    for (const auto& r : rows_) {
        for (unsigned j = 0; j < nu_; ++j) out << (j ? " " : "") << r[j];
        out << '\n';
    }
    return out.str();
}

LinearCode LinearCode::from_text(const std::string& text, gf::FieldPtr field) {
    std::istringstream in(text);
    std::uint64_t q;
    unsigned nu, m;
    if (!(in >> q >> nu >> m)) throw std::invalid_argument("code file: bad header, expected 'q nu m'");
    if (!field) {
        // Default field of order q (q = p^k for supported p).
        for (unsigned p : {2u, 3u, 5u, 7u}) {
            unsigned k = 0;
            std::uint64_t t = q;
            while (t % p == 0) {
                t /= p;
                ++k;
            }
            if (t == 1 && k >= 1) {
                field = gf::FieldTable::make(p, k);
                break;
            }
        }
        if (!field) throw std::invalid_argument("code file: unsupported field order " + std::to_string(q));
    }
    if (field->q() != q) throw std::invalid_argument("code file: header q does not match the field");
    std::vector<std::vector<std::uint32_t>> rows(m, std::vector<std::uint32_t>(nu));
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < nu; ++j)
            if (!(in >> rows[i][j])) throw std::invalid_argument("code file: truncated row data");
    return from_rows(std::move(field), rows);
}

std::uint64_t griesmer_length_bound(unsigned m, std::uint64_t d, std::uint64_t q) {
    if (m == 0 || d == 0) throw std::invalid_argument("griesmer: need m >= 1 and d >= 1");
    std::uint64_t sum = 0, qi = 1;
    for (unsigned i = 0; i < m; ++i) {
        sum += (d + qi - 1) / qi;
        if (qi <= d) qi *= q;  // caps once ceil(d/q^i) reaches 1
    }
    return sum;
}

std::uint64_t max_griesmer_d(std::uint64_t nu, unsigned m, std::uint64_t q) {
    std::uint64_t best = 0;
    for (std::uint64_t d = 1; d <= nu; ++d) {
        if (griesmer_length_bound(m, d, q) <= nu)
            best = d;
    }
    return best;
}

}  // namespace cadet::code
