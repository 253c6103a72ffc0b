#include "thinsec/systems.hpp"

namespace thinsec
{
  namespace
  {
    Rational q(long p, long d = 1) { return Rational(p, d); }

    std::vector<NamedValue> named(const FieldPtr& f, std::vector<std::string> names,
                                  std::vector<std::vector<Rational>> coeffs)
    {
      std::vector<NamedValue> out;
      for (size_t i = 0; i < names.size(); i++)
        out.push_back({names[i], FieldElement(f, IntPoly(coeffs[i]))});
      return out;
    }
  }

  RatMatrix matrix_N1()
  {
    return rat_matrix({{3, 1, -1, -4}, {-1, 2, 0, 0}, {-2, -2, 1, 4}, {3, 2, -1, -5}});
  }

  RatMatrix matrix_N2()
  {
    return rat_matrix({{-2, 2, 1, 0, 1},
                       {2, -5, -2, 3, -2},
                       {1, 0, 0, -1, 0},
                       {1, -2, -1, 1, 0},
                       {0, -2, -2, 3, -2}});
  }

  IntPoly lambda1_quartic() { return IntPoly{-1, 5, -4, -1, 1}; }
  IntPoly lambda2_cubic() { return IntPoly{-1, 12, 8, 1}; }

  FieldPtr lambda1_field()
  {
    static const FieldPtr f = field_new(lambda1_quartic(), RatInterval{q(1, 5), q(3, 10)});
    return f;
  }

  FieldPtr lambda2_field()
  {
    static const FieldPtr f = field_new(lambda2_cubic(), RatInterval{q(0), q(1, 2)});
    return f;
  }

  FieldElement poly_in(const FieldPtr& f, std::initializer_list<Rational> coeffs)
  {
    return FieldElement(f, IntPoly(std::vector<Rational>(coeffs)));
  }

  std::vector<NamedValue> s1_parameters()
  {
    return named(lambda1_field(), {"a", "b", "c", "u"},
                 {{0, 2, -1}, {0, 1}, {1, -3, 1}, {q(-1, 4), q(5, 2), q(-3, 2), q(1, 4)}});
  }

  std::vector<NamedValue> s2_parameters()
  {
    return named(lambda2_field(), {"a", "b", "c", "d", "e"},
                 {{2, q(-58, 3), q(-10, 3)},
                  {0, q(11, 3), q(2, 3)},
                  {-1, q(47, 3), q(8, 3)},
                  {q(-2, 3), q(41, 3), q(7, 3)},
                  {q(5, 3), q(-59, 3), q(-10, 3)}});
  }

  std::vector<Rational> s1_printed_eigenvector()
  {
    return {q(444, 1000), q(254, 1000), q(302, 1000), q(292, 1000)};
  }

  std::vector<Rational> s2_printed_eigenvector()
  {
    return {q(4495, 10000), q(2943, 10000), q(2562, 10000), q(4292, 10000), q(898, 10000)};
  }

  RatMatrix printed_transition_4x4()
  {
    return rat_matrix({{-4, 4, 1, 2}, {-1, 2, 0, 0}, {2, 0, -1, -2}, {-1, 3, 0, -1}});
  }

  RatMatrix printed_transition_5x4()
  {
    return rat_matrix({{1, -1, -1, 0}, {-1, 0, 2, 2}, {0, 1, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  }

  RatMatrix printed_transition_5x5()
  {
    return rat_matrix({{5, -9, -5, 5, -5},
                       {-1, 3, 1, -2, 2},
                       {-3, 4, 2, -1, 1},
                       {5, -9, -4, 4, -3},
                       {0, -2, -2, 3, -2}});
  }

  RatMatrix printed_R1()
  {
    return rat_matrix({{8, 2, 4, -5, 0},
                       {-2, 5, 0, 2, -4},
                       {-2, -2, -1, 1, 1},
                       {4, 2, 2, -2, -1},
                       {-3, 0, -2, 2, 0}});
  }

  RatMatrix printed_L1() { return rat_matrix({{0, 2, 1, 2}, {0, 1, 0, 0}, {2, 0, 4, 1}, {1, 2, 4, 2}}); }

  RatMatrix printed_R2()
  {
    return rat_matrix({{-5, 5, 1, 1, 0},
                       {1, -2, 0, 0, 1},
                       {2, -2, -1, 0, -1},
                       {-4, 5, 1, 0, 1},
                       {-2, 1, -1, 1, 0}});
  }

  RatMatrix printed_L2() { return rat_matrix({{5, 3, 0}, {4, 3, 1}, {4, 2, 1}}); }

  std::vector<NamedValue> printed_Y_widths()
  {
    return named(lambda1_field(), {"r1", "r2", "h", "g", "n"},
                 {{0, 0, 0, 1},
                  {1, -5, 5, -2},
                  {q(-1, 4), q(3, 2), q(-3, 2), q(1, 4)},
                  {0, 0, 1},
                  {q(1, 2), -2, 1, q(-1, 2)}});
  }

  std::vector<NamedValue> printed_Y_widths_after()
  {
    return named(lambda1_field(), {"r1'", "r2'", "h'", "g'", "n'"},
                 {{1, -4, -1, 5},
                  {3, -17, 23, -10},
                  {q(-5, 4), q(13, 2), q(-13, 2), q(5, 4)},
                  {1, -5, 4, 1},
                  {q(1, 2), -3, 5, q(-7, 2)}});
  }

  std::vector<NamedValue> printed_Z_widths()
  {
    return named(lambda2_field(), {"a'", "b'", "c'", "d'", "e'"},
                 {{q(10, 3), q(-124, 3), q(-23, 3)},
                  {q(5, 3), q(-62, 3), q(-10, 3)},
                  {q(-17, 3), q(212, 3), q(37, 3)},
                  {q(19, 3), q(-236, 3), -14},
                  {q(-10, 3), q(125, 3), 7}});
  }

  std::vector<NamedValue> printed_Z_widths_after()
  {
    return named(lambda2_field(), {"a''", "b''", "c''", "d''", "e''"},
                 {{q(23, 3), q(286, 3), 20},
                  {q(-10, 3), q(125, 3), 6},
                  {q(37, 3), q(-461, 3), -28},
                  {-14, q(523, 3), q(100, 3)},
                  {7, q(-262, 3), q(-43, 3)}});
  }

  std::vector<Rational> printed_Y_lengths() { return {2, 1, 5, 5}; }
  std::vector<Rational> printed_Z_lengths() { return {15, 14, 15}; }
}
