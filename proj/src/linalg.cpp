#include "gcx/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace gcx {

void SparseRationalMatrix::set(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("matrix index");
    if (v == 0)
        entries.erase({r, c});
    else
        entries[{r, c}] = v;
}

void SparseRationalMatrix::add(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("matrix index");
    auto it = entries.find({r, c});
    if (it == entries.end()) {
        if (v != 0) entries.emplace(std::make_pair(r, c), v);
        return;
    }
    it->second += v;
    if (it->second == 0) entries.erase(it);
}

namespace {

struct RationalField {
    using Value = Rational;
    static bool is_zero(const Value& v) { return v == 0; }
    Value from_rational(const Rational& r) const { return r; }
    Value quot(const Value& a, const Value& b) const { return a / b; }
    void submul(Value& a, const Value& f, const Value& b) const { a -= f * b; }
};

struct PrimeField {
    uint64_t p;
    using Value = uint64_t;
    static bool is_zero(Value v) { return v == 0; }

    Value mul(Value a, Value b) const {
        return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    Value pow(Value a, uint64_t e) const {
        Value r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Value inv(Value a) const { return pow(a, p - 2); }
    Value quot(Value a, Value b) const { return mul(a, inv(b)); }
    void submul(Value& a, Value f, Value b) const { a = (a + p - mul(f, b)) % p; }

    Value from_rational(const Rational& r) const {
        mpz_class pz(static_cast<unsigned long>(p));
        mpz_class num = r.get_num() % pz;
        if (num < 0) num += pz;
        mpz_class den = r.get_den() % pz;
        if (den == 0)
            throw std::invalid_argument("modular rank: prime divides a denominator");
        return mul(num.get_ui(), inv(den.get_ui()));
    }
};

// Sparse Gaussian elimination with a Markowitz-style pivot rule: the column
// with fewest active entries, then the shortest row in it; ties broken by
// smallest index. Rows are sorted (column, value) vectors; per-column row
// lists are maintained lazily with exact counts and periodic compaction.
// Rows may be appended after elimination (reduced against recorded pivots),
// so constrained solves just continue where the homogeneous part stopped.
template <class F>
struct Elimination {
    const F& field;
    using Value = typename F::Value;
    using Row = std::vector<std::pair<int, Value>>;
    int cols;
    bool with_rhs;

    std::vector<Row> row;
    std::vector<Value> rhs;
    std::vector<char> active;
    std::vector<std::vector<int>> col_rows;
    std::vector<int> col_count;
    std::vector<std::pair<int, int>> pivots;  // (row, col) in elimination order
    std::size_t stale_pushes = 0;

    Elimination(const F& f, int cols_, bool with_rhs_)
        : field(f), cols(cols_), with_rhs(with_rhs_), col_rows(cols_), col_count(cols_, 0) {}

    static typename Row::const_iterator find_col(const Row& r, int c) {
        auto it = std::lower_bound(r.begin(), r.end(), c,
                                   [](const std::pair<int, Value>& e, int col) {
                                       return e.first < col;
                                   });
        return (it != r.end() && it->first == c) ? it : r.end();
    }

    void add_row(Row r, Value b) {
        std::sort(r.begin(), r.end());
        for (const auto& [pr, pc] : pivots) {
            auto it = find_col(r, pc);
            if (it == r.end()) continue;
            Value f = field.quot(it->second, find_col(row[pr], pc)->second);
            r = merged(r, row[pr], f, -1);
            if (with_rhs) field.submul(b, f, rhs[pr]);
        }
        int idx = static_cast<int>(row.size());
        row.push_back(std::move(r));
        rhs.push_back(b);
        active.push_back(1);
        for (const auto& [c, v] : row[idx]) {
            col_rows[c].push_back(idx);
            ++col_count[c];
        }
    }

    // a - f*b; when track >= 0, maintains col bookkeeping for row index `track`.
    Row merged(const Row& a, const Row& b, const Value& f, int track) {
        Row out;
        out.reserve(a.size() + b.size());
        auto ia = a.begin();
        auto ib = b.begin();
        while (ia != a.end() || ib != b.end()) {
            if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
                out.push_back(*ia);
                ++ia;
            } else if (ia == a.end() || ib->first < ia->first) {
                Value nv{};
                field.submul(nv, f, ib->second);
                if (!F::is_zero(nv)) {
                    out.push_back({ib->first, nv});
                    if (track >= 0) {
                        col_rows[ib->first].push_back(track);
                        ++col_count[ib->first];
                        ++stale_pushes;
                    }
                }
                ++ib;
            } else {
                Value nv = ia->second;
                field.submul(nv, f, ib->second);
                if (!F::is_zero(nv))
                    out.push_back({ia->first, nv});
                else if (track >= 0)
                    --col_count[ia->first];
                ++ia;
                ++ib;
            }
        }
        return out;
    }

    void compact_col(int c) {
        auto& list = col_rows[c];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [&](int i) {
                                      return !active[i] || find_col(row[i], c) == row[i].end();
                                  }),
                   list.end());
        col_count[c] = static_cast<int>(list.size());
    }

    void compact_all() {
        for (int c = 0; c < cols; ++c)
            if (!col_rows[c].empty()) compact_col(c);
        stale_pushes = 0;
    }

    void eliminate() {
        while (true) {
            if (stale_pushes > 16u * 1024 * 1024) compact_all();
            int best_c = -1;
            for (int c = 0; c < cols; ++c)
                if (col_count[c] > 0 && (best_c == -1 || col_count[c] < col_count[best_c]))
                    best_c = c;
            if (best_c == -1) break;
            compact_col(best_c);
            int best_r = -1;
            for (int i : col_rows[best_c])
                if (best_r == -1 || row[i].size() < row[best_r].size()) best_r = i;
            pivot(best_r, best_c);
        }
    }

    void pivot(int r, int c) {
        Value piv = find_col(row[r], c)->second;
        std::vector<int> targets = col_rows[c];
        for (int i : targets) {
            if (i == r) continue;
            Value f = field.quot(find_col(row[i], c)->second, piv);
            row[i] = merged(row[i], row[r], f, i);
            if (with_rhs) field.submul(rhs[i], f, rhs[r]);
        }
        active[r] = 0;
        for (const auto& [cc, v] : row[r]) --col_count[cc];
        pivots.push_back({r, c});
    }

    // Active rows are all empty after eliminate(); nonzero rhs there means the
    // system is inconsistent.
    bool consistent() const {
        for (std::size_t i = 0; i < row.size(); ++i)
            if (active[i] && !F::is_zero(rhs[i])) return false;
        return true;
    }

    std::vector<Value> back_substitute() const {
        std::vector<Value> x(cols, Value{});
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            auto [r, c] = *it;
            Value acc = rhs[r];
            for (const auto& [cc, v] : row[r]) {
                if (cc == c) continue;
                field.submul(acc, v, x[cc]);
            }
            x[c] = field.quot(acc, find_col(row[r], c)->second);
        }
        return x;
    }
};

template <class F>
int rank_with(const F& field, const SparseRationalMatrix& m) {
    Elimination<F> elim(field, m.cols, false);
    std::vector<typename Elimination<F>::Row> rows(m.rows);
    for (const auto& [rc, v] : m.entries) {
        // entries divisible by the prime vanish in the field
        typename F::Value fv = field.from_rational(v);
        if (!F::is_zero(fv)) rows[rc.first].push_back({rc.second, fv});
    }
    for (auto& r : rows) elim.add_row(std::move(r), typename F::Value{});
    elim.eliminate();
    return static_cast<int>(elim.pivots.size());
}

}  // namespace

int rank(const SparseRationalMatrix& m, RankMode mode) {
    if (mode.exact) {
        RationalField f;
        return rank_with(f, m);
    }
    PrimeField f{mode.prime};
    return rank_with(f, m);
}

int nullity(const SparseRationalMatrix& m, RankMode mode) { return m.cols - rank(m, mode); }

KernelSolution solve_kernel(const SparseRationalMatrix& m, const std::map<int, Rational>& fixed) {
    RationalField field;
    Elimination<RationalField> elim(field, m.cols, true);
    std::vector<Elimination<RationalField>::Row> rows(m.rows);
    for (const auto& [rc, v] : m.entries) rows[rc.first].push_back({rc.second, v});
    for (auto& r : rows) elim.add_row(std::move(r), Rational(0));
    elim.eliminate();

    KernelSolution sol;
    sol.nullity = m.cols - static_cast<int>(elim.pivots.size());

    for (const auto& [c, v] : fixed) {
        if (c < 0 || c >= m.cols) throw std::out_of_range("fixed column out of range");
        elim.add_row({{c, Rational(1)}}, v);
    }
    elim.eliminate();
    if (!elim.consistent()) throw NoSolutionError("constraints are inconsistent with the kernel");

    sol.free_parameter_count = m.cols - static_cast<int>(elim.pivots.size());
    sol.particular = elim.back_substitute();
    return sol;
}

std::string dump_matrix(const SparseRationalMatrix& m) {
    std::ostringstream out;
    out << m.rows << ' ' << m.cols << ' ' << m.entries.size() << '\n';
    for (const auto& [rc, v] : m.entries)
        out << rc.first << ' ' << rc.second << ' ' << to_string(v) << '\n';
    return out.str();
}

SparseRationalMatrix parse_matrix_dump(const std::string& text) {
    std::istringstream in(text);
    SparseRationalMatrix m;
    std::size_t nnz = 0;
    if (!(in >> m.rows >> m.cols >> nnz)) throw ParseError("malformed matrix header");
    for (std::size_t k = 0; k < nnz; ++k) {
        int r, c;
        std::string v;
        if (!(in >> r >> c >> v)) throw ParseError("truncated matrix dump");
        m.set(r, c, parse_rational(v));
    }
    return m;
}

}  // namespace gcx
