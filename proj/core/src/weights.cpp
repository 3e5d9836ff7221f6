#include "linperiod/weights.hpp"

#include "linperiod/errors.hpp"

#include <numeric>

namespace linperiod {

DominantWeight::DominantWeight(std::vector<long> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw InvalidArgument("dominant weight needs at least one part");
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] < parts_[i])
            throw InvalidArgument("weight is not dominant: " + to_string(*this));
}

long DominantWeight::total() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

DominantWeight DominantWeight::shifted(long c) const
{
    std::vector<long> p(parts_);
    for (auto& x : p)
        x -= c;
    return DominantWeight(std::move(p));
}

std::string to_string(const DominantWeight& w)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(w[i]);
    }
    return s + ")";
}

SatakeData::SatakeData(std::vector<Rational> z_, Rational u_) : z(std::move(z_)), u(std::move(u_))
{
    for (const auto& zi : z)
        if (zi == 0)
            throw InvalidArgument("Satake parameters must be nonzero");
    if (u == 0)
        throw InvalidArgument("twist value u must be nonzero");
}

namespace {

// Fill parts[pos..] with a non-increasing tail bounded by `cap`, summing to `remaining`.
void extend(std::vector<long>& parts, std::size_t pos, long remaining, long cap, std::vector<DominantWeight>& out)
{
    const std::size_t n = parts.size();
    if (pos + 1 == n) {
        if (remaining <= cap) {
            parts[pos] = remaining;
            out.emplace_back(parts);
        }
        return;
    }
    const long slots = static_cast<long>(n - pos);
    for (long v = std::min(cap, remaining); v * slots >= remaining && v >= 0; --v) {
        parts[pos] = v;
        extend(parts, pos + 1, remaining - v, v, out);
    }
}

} // namespace

std::vector<DominantWeight> enumerate_weights(std::size_t n, long total)
{
    std::vector<DominantWeight> out;
    if (n == 0 || total < 0)
        return out;
    std::vector<long> parts(n, 0);
    extend(parts, 0, total, total, out);
    return out;
}

long alt_statistic(const DominantWeight& w)
{
    long c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        c += (i % 2 == 0) ? w[i] : -w[i];
    return c;
}

} // namespace linperiod
