#ifndef MVOP_EIGEN_SEQ_HPP
#define MVOP_EIGEN_SEQ_HPP

#include <vector>

#include "mvop/matrix.hpp"
#include "mvop/poly.hpp"

namespace mvop {

// Matrix whose entries are polynomials in the sequence index n; evaluating
// at an integer n gives the eigenvalue matrix of that member.
class EigenSeq {
 public:
  EigenSeq() : size_(0) {}
  explicit EigenSeq(int size) : size_(size), e_(size, std::vector<Poly>(size)) {}

  static EigenSeq diagonal(const std::vector<Poly>& d);
  static EigenSeq constant(const Matrix& m);
  static EigenSeq unit(int size, int i, int j, const Poly& p);  // p * E_ij

  int size() const { return size_; }
  Poly& at(int i, int j) { return e_[i][j]; }
  const Poly& at(int i, int j) const { return e_[i][j]; }

  Matrix eval(long n) const;
  bool is_zero() const;
  int max_degree() const;

  EigenSeq operator+(const EigenSeq& o) const;
  EigenSeq operator-(const EigenSeq& o) const;
  EigenSeq operator*(const EigenSeq& o) const;
  EigenSeq operator*(const Rational& s) const;
  bool operator==(const EigenSeq& o) const { return size_ == o.size_ && e_ == o.e_; }

 private:
  int size_;
  std::vector<std::vector<Poly>> e_;
};

}  // namespace mvop

#endif
