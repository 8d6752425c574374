#pragma once

#include <cmath>

namespace slipstokes {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
inline Vec2& operator+=(Vec2& a, Vec2 b) { a.x += b.x; a.y += b.y; return a; }
inline Vec2& operator-=(Vec2& a, Vec2 b) { a.x -= b.x; a.y -= b.y; return a; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }
inline double norm_squared(Vec2 a) { return a.x * a.x + a.y * a.y; }

/// Counter-clockwise perpendicular; for an outward unit normal n this is the
/// unit tangent used throughout for tangential decompositions.
inline Vec2 perp(Vec2 n) { return {-n.y, n.x}; }

/// 2x2 matrix, row major.
struct Mat2 {
    double a[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

    double& operator()(int i, int j) { return a[i][j]; }
    double operator()(int i, int j) const { return a[i][j]; }
};

inline Mat2 operator+(const Mat2& m, const Mat2& n) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = m(i, j) + n(i, j);
    return r;
}

inline Mat2 operator-(const Mat2& m, const Mat2& n) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = m(i, j) - n(i, j);
    return r;
}

inline Mat2 operator*(double s, const Mat2& m) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = s * m(i, j);
    return r;
}

inline Vec2 operator*(const Mat2& m, Vec2 v) {
    return {m(0, 0) * v.x + m(0, 1) * v.y, m(1, 0) * v.x + m(1, 1) * v.y};
}

/// Frobenius inner product m:n.
inline double contract(const Mat2& m, const Mat2& n) {
    double s = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += m(i, j) * n(i, j);
    return s;
}

/// Symmetric part (m + m^T)/2.
inline Mat2 sym(const Mat2& m) {
    Mat2 r;
    r(0, 0) = m(0, 0);
    r(1, 1) = m(1, 1);
    r(0, 1) = r(1, 0) = 0.5 * (m(0, 1) + m(1, 0));
    return r;
}

}  // namespace slipstokes
