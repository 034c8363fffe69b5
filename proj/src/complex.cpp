#include "flatchain/complex.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <set>

namespace flatchain {

GridComplex::GridComplex(int d, int n, ComplexLimits limits) : d_(d), n_(n)
{
    if (d < 1 || d > limits.max_dim)
        fail("geometry", "kuhn complex dimension " + std::to_string(d) + " outside [1, " +
                             std::to_string(limits.max_dim) + "]");
    if (n < 1 || n > limits.max_resolution)
        fail("geometry", "kuhn complex resolution " + std::to_string(n) + " outside [1, " +
                             std::to_string(limits.max_resolution) + "]");

    const int side = n + 1;
    std::vector<int> stride(d);
    stride[d - 1] = 1;
    for (int i = d - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * side;

    std::vector<std::set<std::vector<int>>> found(d + 1);
    std::vector<int> perm(d);
    std::vector<int> base(d, 0);
    const long cubes = static_cast<long>(std::pow(n, d));
    for (long c = 0; c < cubes; ++c) {
        long rest = c;
        int base_idx = 0;
        for (int i = d - 1; i >= 0; --i) {
            base[i] = static_cast<int>(rest % n);
            rest /= n;
            base_idx += base[i] * stride[i];
        }
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> chain{base_idx};
            for (int j = 0; j < d; ++j)
                chain.push_back(chain.back() + stride[perm[j]]);
            // Every subset of the chain is a face; the chain is ascending.
            for (int mask = 1; mask < (1 << (d + 1)); ++mask) {
                std::vector<int> face;
                for (int j = 0; j <= d; ++j)
                    if (mask & (1 << j))
                        face.push_back(chain[j]);
                found[face.size() - 1].insert(std::move(face));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    simplices_.resize(d + 1);
    lookup_.resize(d + 1);
    incidence_.resize(d + 1);
    sq_volumes_.resize(d + 1);
    volumes_.resize(d + 1);
    volumes_d_.resize(d + 1);
    for (int k = 0; k <= d; ++k) {
        for (const auto& s : found[k]) {
            lookup_[k].emplace(s, static_cast<int>(simplices_[k].size()));
            simplices_[k].push_back(s);
        }
        for (std::size_t id = 0; id < simplices_[k].size(); ++id) {
            Simplex geo = simplex(k, static_cast<int>(id));
            sq_volumes_[k].push_back(flatchain::squared_volume(geo));
            volumes_[k].push_back(SurdSum::sqrt_of(sq_volumes_[k].back()));
            volumes_d_[k].push_back(volumes_[k].back().to_double());
        }
    }
    for (int k = 1; k <= d; ++k) {
        incidence_[k].resize(simplices_[k].size());
        for (std::size_t id = 0; id < simplices_[k].size(); ++id) {
            const auto& s = simplices_[k][id];
            for (int i = 0; i <= k; ++i) {
                std::vector<int> f;
                for (int j = 0; j <= k; ++j)
                    if (j != i)
                        f.push_back(s[j]);
                incidence_[k][id].push_back({lookup_[k - 1].at(f), (i % 2) ? -1 : 1});
            }
        }
    }
}

Point GridComplex::vertex_point(int v) const
{
    Point p(d_);
    for (int i = d_ - 1; i >= 0; --i) {
        p[i] = Rational(v % (n_ + 1), n_);
        v /= (n_ + 1);
    }
    return p;
}

Simplex GridComplex::simplex(int k, int id) const
{
    std::vector<Point> pts;
    for (int v : simplices_.at(k).at(id))
        pts.push_back(vertex_point(v));
    return Simplex(std::move(pts));
}

std::optional<int> GridComplex::vertex_index(const Point& p) const
{
    if (static_cast<int>(p.size()) != d_)
        return std::nullopt;
    int idx = 0;
    for (int i = 0; i < d_; ++i) {
        Rational scaled = p[i] * n_;
        if (!is_integer(scaled) || scaled < 0 || scaled > n_)
            return std::nullopt;
        idx = idx * (n_ + 1) + numerator(scaled).convert_to<int>();
    }
    return idx;
}

std::optional<GridComplex::Face> GridComplex::locate(const Simplex& s) const
{
    const int k = s.dim();
    if (k < 0 || k > d_ || s.ambient_dim() != d_)
        return std::nullopt;
    std::vector<int> ids;
    for (const auto& p : s.vertices()) {
        auto v = vertex_index(p);
        if (!v)
            return std::nullopt;
        ids.push_back(*v);
    }
    int sign = sort_parity(ids);
    if (sign == 0)
        return std::nullopt;
    auto it = lookup_[k].find(ids);
    if (it == lookup_[k].end())
        return std::nullopt;
    return Face{it->second, sign};
}

int GridComplex::cube_of(int top_id) const
{
    // The lowest vertex of a Kuhn simplex is its cube's base corner.
    int v = simplices_.at(d_).at(top_id).front();
    int cube = 0, mult = 1;
    for (int i = d_ - 1; i >= 0; --i) {
        cube += (v % (n_ + 1)) * mult;
        v /= (n_ + 1);
        mult *= n_;
    }
    return cube;
}

std::shared_ptr<const GridComplex> kuhn_complex(int d, int n, ComplexLimits limits)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const GridComplex>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({d, n});
        if (it != cache.end())
            return it->second;
    }
    auto built = std::make_shared<const GridComplex>(d, n, limits);
    std::lock_guard lock(mu);
    return cache.emplace(std::make_pair(d, n), std::move(built)).first->second;
}

}   // namespace flatchain
