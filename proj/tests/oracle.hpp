#pragma once

// Reference values frozen from an independent 70-digit evaluation.

#include <string>

#include "zc/numerics.hpp"

namespace oracle {

/// True when x agrees with the decimal literal to d significant digits.
inline bool agrees(const zc::Real& x, const std::string& literal, int d) {
    const zc::Real ref = zc::parse_decimal(literal);
    return zc::agree_digits(x, ref, d);
}

inline bool agrees(const zc::Complex& z, const std::string& re, const std::string& im, int d) {
    const zc::Complex ref(zc::parse_decimal(re), zc::parse_decimal(im));
    return zc::agree_digits(z, ref, d);
}

inline const std::string pi = "3.141592653589793238462643383279502884197169399375105821";
inline const std::string zeta3 = "1.202056903159594285399738161511449990764986292340498882";
inline const std::string zeta5 = "1.036927755143369926331365486457034168057080919501912812";
inline const std::string zeta_prime2 = "-0.9375482543158437537025740945678649778978602886148299259";
inline const std::string hurwitz3_third = "27.56106119970080377622787797740750928454209531301488108";
inline const std::string hurwitz_prime3_5half = "-0.1463045084876580175374885617953843992604868528513006428";
inline const std::string j0_at_1 = "0.7651976865579665514497175261026632209092742897553252419";
inline const std::string j0_zero1 = "2.404825557695772768621631879326454643124244909145967136";
inline const std::string j1_zero3 = "10.17346813506272207718571177677584406981951250019168556";
inline const std::string j5half_zero2 = "9.095011330476355156337698327989695252400929366383085416";
inline const std::string k0_at_1 = "0.4210244382407083333356273792126090361362197482266604723";
inline const std::string tan_root1 = "4.493409457909064175307880927280322082215583872290040803";
inline const std::string tan_root5 = "17.22075527193076873957371892506096229893332971829167936";
inline const std::string i_ratio_03_2 = "0.8927611574228675494680532498269302727284954351713708679";

}  // namespace oracle
