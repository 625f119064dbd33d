#include "schubert/index_tuple.hpp"

#include <cctype>
#include <sstream>

namespace schubert {

IndexTuple::IndexTuple(std::vector<int> entries, int m) : entries_(std::move(entries)), m_(m) {
    const int l = static_cast<int>(entries_.size());
    if (l < 1 || l > m) throw InvalidInput("tuple length must satisfy 1 <= l <= m");
    if (entries_.front() < 1 || entries_.back() > m)
        throw InvalidInput("tuple entries must lie in [1, m]");
    for (int i = 0; i + 1 < l; ++i)
        if (entries_[i] >= entries_[i + 1])
            throw InvalidInput("tuple entries must be strictly increasing");
}

int IndexTuple::delta() const {
    int d = 0;
    for (int i = 1; i <= l(); ++i) d += at(i) - i;
    return d;
}

bool IndexTuple::leq(const IndexTuple& beta, const IndexTuple& alpha) {
    if (beta.l() != alpha.l() || beta.m() != alpha.m())
        throw InvalidInput("cannot compare tuples with different l or m");
    for (int i = 1; i <= beta.l(); ++i)
        if (beta.at(i) > alpha.at(i)) return false;
    return true;
}

std::vector<IndexTuple> IndexTuple::downset() const {
    std::vector<IndexTuple> out;
    std::vector<int> beta(static_cast<size_t>(l()));
    // Depth-first in lexicographic order: position i ranges over
    // (beta_{i-1}, alpha_i].
    auto rec = [&](auto&& self, int i) -> void {
        if (i == l()) {
            out.emplace_back(beta, m_);
            return;
        }
        int lo = i == 0 ? 1 : beta[static_cast<size_t>(i) - 1] + 1;
        for (int v = lo; v <= at(i + 1); ++v) {
            beta[static_cast<size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

BlockStructure IndexTuple::blocks() const {
    BlockStructure bs;
    for (int i = 1; i < l(); ++i)
        if (at(i + 1) != at(i) + 1) bs.boundaries.push_back(i);
    return bs;
}

std::vector<IndexTuple> IndexTuple::all(int l, int m) {
    if (l < 1 || l > m) throw InvalidInput("enumerate_all requires 1 <= l <= m");
    return theta_tuple(l, m).downset();
}

std::string IndexTuple::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 1; i <= l(); ++i) {
        if (i > 1) os << ",";
        os << at(i);
    }
    os << ")";
    return os.str();
}

IndexTuple IndexTuple::parse(const std::string& text, int m) {
    std::string body = text;
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    std::vector<int> entries;
    std::istringstream is(body);
    std::string part;
    while (std::getline(is, part, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(part, &used);
            while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) ++used;
            if (used != part.size()) throw std::invalid_argument(part);
            entries.push_back(v);
        } catch (const std::exception&) {
            throw InvalidInput("cannot parse tuple entry '" + part + "'");
        }
    }
    if (entries.empty()) throw InvalidInput("empty tuple '" + text + "'");
    return IndexTuple(std::move(entries), m);
}

IndexTuple theta_tuple(int l, int m) {
    std::vector<int> e(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) e[static_cast<size_t>(i)] = m - l + 1 + i;
    return IndexTuple(std::move(e), m);
}

IndexTuple eta_tuple(int l, int m) {
    if (l <= 1 || l >= m) throw RangeError("Schubert divisor requires 1 < l < m");
    std::vector<int> e(static_cast<size_t>(l));
    e[0] = m - l;
    for (int i = 1; i < l; ++i) e[static_cast<size_t>(i)] = m - l + 1 + i;
    return IndexTuple(std::move(e), m);
}

}  // namespace schubert
