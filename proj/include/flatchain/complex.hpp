/**
 * Kuhn (Freudenthal) triangulation of [0,1]^d at resolution n.
 *
 * Vertices are the lattice points (i_1/n, …, i_d/n), indexed row-major with
 * the first coordinate most significant, so ascending index order equals
 * lexicographic order of the points. Each simplex is stored as its sorted
 * vertex-index tuple; that order is its reference orientation and the
 * signed incidence is the alternating vertex-deletion rule.
 */
#ifndef FLATCHAIN_COMPLEX_HPP
#define FLATCHAIN_COMPLEX_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "flatchain/exact_mass.hpp"
#include "flatchain/geometry.hpp"

namespace flatchain {

struct ComplexLimits
{
    int max_dim = 3;
    int max_resolution = 64;
};

class GridComplex
{
  public:
    struct Face
    {
        int id;
        int sign;
    };

    GridComplex(int d, int n, ComplexLimits limits = {});

    int dim() const { return d_; }
    int resolution() const { return n_; }

    std::size_t count(int k) const { return simplices_.at(k).size(); }
    const std::vector<int>& vertex_ids(int k, int id) const { return simplices_.at(k).at(id); }

    Point vertex_point(int v) const;
    Simplex simplex(int k, int id) const;

    /// Signed (k−1)-faces of a k-simplex.
    const std::vector<Face>& faces(int k, int id) const { return incidence_.at(k).at(id); }

    const Rational& squared_volume(int k, int id) const { return sq_volumes_.at(k).at(id); }
    const SurdSum& volume(int k, int id) const { return volumes_.at(k).at(id); }
    double volume_double(int k, int id) const { return volumes_d_.at(k).at(id); }

    /// Lattice index of a point, if it is a grid vertex.
    std::optional<int> vertex_index(const Point& p) const;

    /**
     * Locate a simplex of the complex given in any vertex order: returns
     * (id, s) where s = ±1 is the sign of the vertex permutation relative
     * to the reference orientation.
     */
    std::optional<Face> locate(const Simplex& s) const;

    /// Top cell index (row-major cube index) containing a d-simplex.
    int cube_of(int top_id) const;

  private:
    int d_;
    int n_;
    std::vector<std::vector<std::vector<int>>> simplices_;
    std::vector<std::map<std::vector<int>, int>> lookup_;
    std::vector<std::vector<std::vector<Face>>> incidence_;
    std::vector<std::vector<Rational>> sq_volumes_;
    std::vector<std::vector<SurdSum>> volumes_;
    std::vector<std::vector<double>> volumes_d_;
};

/// Shared immutable complex; built once per (d, n).
std::shared_ptr<const GridComplex> kuhn_complex(int d, int n, ComplexLimits limits = {});

/// Parity of the permutation sorting `v` ascending (+1 even, −1 odd), 0 on repeats.
template <typename T>
int sort_parity(std::vector<T>& v)
{
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
            std::swap(v[j], v[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i - 1] < v[i]))
            return 0;
    return sign;
}

}   // namespace flatchain

#endif
