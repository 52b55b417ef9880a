#pragma once

// Published matrices for the family (x^{n+1}, y^{n+1}, z^{n+1}) : (x+y+z)^{n+1},
// transcribed entry for entry. Each table is `scale` times the integer matrix.

#include <string>
#include <vector>

#include "gorenstein/linalg.hpp"
#include "gorenstein/poly_matrix.hpp"

namespace gorenstein::golden {

struct Table {
  const char* scale;
  std::vector<std::vector<std::string>> entries;
};

inline const Table kN2P = {
    "1",
    {
        {"0", "3", "3"},
        {"3", "3", "6"},
        {"3", "6", "3"},
    }};

inline const Table kN2PInverse = {
    "1/6",
    {
        {"-3", "1", "1"},
        {"1", "-1", "1"},
        {"1", "1", "-1"},
    }};

inline const Table kN2R = {
    "1",
    {
        {"3", "6", "3"},
        {"0", "3", "3"},
        {"3", "3", "0"},
    }};

inline const Table kN2APrime = {
    "1",
    {
        {"0", "6"},
        {"-6", "0"},
    }};

inline const Table kN2B = {
    "1",
    {
        {"-x+z", "-y", "0"},
        {"0", "z", "x-y"},
    }};

inline const Table kN2D = {
    "1/6",
    {
        {"0", "-x", "x"},
        {"x", "0", "-x"},
        {"-x", "x", "0"},
    }};

inline const Table kN2C2 = {
    "1/6",
    {
        {"0", "-x^2+xz-z^2", "2x^2-xy-xz+yz"},
        {"x^2-xz+z^2", "0", "-x^2+xy-y^2"},
        {"-2x^2+xy+xz-yz", "x^2-xy+y^2", "0"},
    }};

inline const Table kN4P = {
    "1",
    {
        {"0", "0", "0", "0", "0", "0", "5", "10", "10", "5"},
        {"0", "0", "0", "5", "10", "10", "5", "20", "30", "20"},
        {"0", "0", "0", "10", "10", "5", "20", "30", "20", "5"},
        {"0", "5", "10", "5", "20", "30", "0", "10", "30", "30"},
        {"0", "10", "10", "20", "30", "20", "10", "30", "30", "10"},
        {"0", "10", "5", "30", "20", "5", "30", "30", "10", "0"},
        {"5", "5", "20", "0", "10", "30", "0", "0", "10", "20"},
        {"10", "20", "30", "10", "30", "30", "0", "10", "20", "10"},
        {"10", "30", "20", "30", "30", "10", "10", "20", "10", "0"},
        {"5", "20", "5", "30", "10", "0", "20", "10", "0", "0"},
    }};

inline const Table kN4PInverse = {
    "1/70",
    {
        {"-35", "15", "15", "-5", "-10", "-5", "1", "3", "3", "1"},
        {"15", "-15", "5", "9", "2", "-7", "-3", "-3", "3", "3"},
        {"15", "5", "-15", "-7", "2", "9", "3", "3", "-3", "-3"},
        {"-5", "9", "-7", "-9", "6", "1", "5", "-1", "-3", "3"},
        {"-10", "2", "2", "6", "-9", "6", "-6", "3", "3", "-6"},
        {"-5", "-7", "9", "1", "6", "-9", "3", "-3", "-1", "5"},
        {"1", "-3", "3", "5", "-6", "3", "-5", "5", "-3", "1"},
        {"3", "-3", "3", "-1", "3", "-3", "5", "-7", "6", "-3"},
        {"3", "3", "-3", "-3", "3", "-1", "-3", "6", "-7", "5"},
        {"1", "3", "-3", "3", "-6", "5", "1", "-3", "5", "-5"},
    }};

inline const Table kN4R = {
    "1",
    {
        {"5", "20", "30", "20", "5"},
        {"0", "10", "30", "30", "10"},
        {"10", "30", "30", "10", "0"},
        {"0", "0", "10", "20", "10"},
        {"0", "10", "20", "10", "0"},
        {"10", "20", "10", "0", "0"},
        {"0", "0", "0", "5", "5"},
        {"0", "0", "5", "5", "0"},
        {"0", "5", "5", "0", "0"},
        {"5", "5", "0", "0", "0"},
    }};

inline const Table kN4APrime = {
    "1/2",
    {
        {"0", "50", "75", "45"},
        {"-50", "0", "85", "75"},
        {"-75", "-85", "0", "50"},
        {"-45", "-75", "-50", "0"},
    }};

inline const Table kN4B = {
    "1/2",
    {
        {"-2x+2z", "-x-2y", "0", "0", "0"},
        {"0", "-x+2z", "-2y", "0", "0"},
        {"0", "0", "2z", "x-2y", "0"},
        {"0", "0", "0", "x+2z", "2x-2y"},
    }};

inline const Table kN4D = {
    "1/70",
    {
        {"0", "-5x", "5x", "-3x", "x"},
        {"5x", "0", "-4x", "5x", "-3x"},
        {"-5x", "4x", "0", "-4x", "5x"},
        {"3x", "-5x", "4x", "0", "-5x"},
        {"-x", "3x", "-5x", "5x", "0"},
    }};

inline const Table kN4C2 = {
    "1/70",
    {
        {"0", "-10x^2+15xz-10z^2", "5x^2-10xy-15xz+10yz+15z^2", "-2x^2+15xy+16xz-15yz-17z^2", "18x^2-17xy-17xz+17yz"},
        {"10x^2-15xz+10z^2", "0", "-4x^2-5xy-10y^2-3xz-15yz-9z^2", "4x^2+4xy+15y^2+4xz+26yz+15z^2", "-2x^2+16xy-17y^2+15xz-15yz"},
        {"-5x^2+10xy+15xz-10yz-15z^2", "4x^2+5xy+10y^2+3xz+15yz+9z^2", "0", "-4x^2-3xy-9y^2-5xz-15yz-10z^2", "5x^2-15xy+15y^2-10xz+10yz"},
        {"2x^2-15xy-16xz+15yz+17z^2", "-4x^2-4xy-15y^2-4xz-26yz-15z^2", "4x^2+3xy+9y^2+5xz+15yz+10z^2", "0", "-10x^2+15xy-10y^2"},
        {"-18x^2+17xy+17xz-17yz", "2x^2-16xy+17y^2-15xz+15yz", "-5x^2+15xy-15y^2+10xz-10yz", "10x^2-15xy+10y^2", "0"},
    }};

inline const Table kN6C2 = {
    "1/1848",
    {
        {"0", "-252x^2+420xz-252z^2", "126x^2-252xy-420xz+252yz+378z^2", "-56x^2+378xy+434xz-378yz-434z^2", "21x^2-434xy-448xz+434yz+455z^2", "-6x^2+455xy+457xz-455yz-461z^2", "463x^2-461xy-461xz+461yz"},
        {"252x^2-420xz+252z^2", "0", "-84x^2-126xy-252y^2-42xz-378yz-210z^2", "84x^2+112xy+378y^2+56xz+644yz+350z^2", "-54x^2-63xy-434y^2-45xz-805yz-425z^2", "24x^2+24xy+455y^2+24xz+886yz+455z^2", "-6x^2+457xy-461y^2+455xz-455yz"},
        {"-126x^2+252xy+420xz-252yz-378z^2", "84x^2+126xy+252y^2+42xz+378yz+210z^2", "0", "-60x^2-70xy-210y^2-50xz-350yz-200z^2", "75x^2+75xy+350y^2+75xz+625yz+350z^2", "-54x^2-45xy-425y^2-63xz-805yz-434z^2", "21x^2-448xy+455y^2-434xz+434yz"},
        {"56x^2-378xy-434xz+378yz+434z^2", "-84x^2-112xy-378y^2-56xz-644yz-350z^2", "60x^2+70xy+210y^2+50xz+350yz+200z^2", "0", "-60x^2-50xy-200y^2-70xz-350yz-210z^2", "84x^2+56xy+350y^2+112xz+644yz+378z^2", "-56x^2+434xy-434y^2+378xz-378yz"},
        {"-21x^2+434xy+448xz-434yz-455z^2", "54x^2+63xy+434y^2+45xz+805yz+425z^2", "-75x^2-75xy-350y^2-75xz-625yz-350z^2", "60x^2+50xy+200y^2+70xz+350yz+210z^2", "0", "-84x^2-42xy-210y^2-126xz-378yz-252z^2", "126x^2-420xy+378y^2-252xz+252yz"},
        {"6x^2-455xy-457xz+455yz+461z^2", "-24x^2-24xy-455y^2-24xz-886yz-455z^2", "54x^2+45xy+425y^2+63xz+805yz+434z^2", "-84x^2-56xy-350y^2-112xz-644yz-378z^2", "84x^2+42xy+210y^2+126xz+378yz+252z^2", "0", "-252x^2+420xy-252y^2"},
        {"-463x^2+461xy+461xz-461yz", "6x^2-457xy+461y^2-455xz+455yz", "-21x^2+448xy-455y^2+434xz-434yz", "56x^2-434xy+434y^2-378xz+378yz", "-126x^2+420xy-378y^2+252xz-252yz", "252x^2-420xy+252y^2", "0"},
    }};

inline FieldMatrix constant_table(const Table& t) {
  const Field q = Field::rationals();
  return Scalar::parse(q, t.scale) * make_matrix(q, t.entries);
}

/// Entries are homogeneous of `degree`; "0" entries are read as zero forms of that degree.
inline PolyMatrix polynomial_table(const Table& t, int degree) {
  const Field q = Field::rationals();
  const Scalar scale = Scalar::parse(q, t.scale);
  PolyMatrix out(t.entries.size(), t.entries.front().size(), q, degree);
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      out.set(i, j, scale * parse_polynomial(q, t.entries[i][j], degree));
    }
  }
  return out;
}

}  // namespace gorenstein::golden
