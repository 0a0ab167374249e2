#pragma once

// Published reference values used by the self-test and the acceptance suite.

#include <array>
#include <string_view>

namespace duffing::reference {

// w_1 .. w_20 of the weak-coupling frequency series.
inline constexpr std::array<std::string_view, 20> weak_coefficients = {
    "3/8",
    "-21/256",
    "81/2048",
    "-6549/262144",
    "37737/2097152",
    "-936183/67108864",
    "6077907/536870912",
    "-2604833685/274877906944",
    "17839453041/2199023255552",
    "-497158650207/70368744177664",
    "3511276321347/562949953421312",
    "-401225915283063/72057594037927936",
    "2892201453147555/576460752303423488",
    "-84053106665670789/18446744073709551616",
    "614845335384090729/147573952589676412928",
    "-1158192705499996341141/302231454903657293676544",
    "8566538482894401288225/2417851639229258349412352",
    "-254612814518190043882263/77371252455336267181195264",
    "1899627691040292362960331/618970019642690137449562112",
    "-227596989316436230247319519/79228162514264337593543950336",
};

// b_0^(N) for N = 1 .. 20.
inline constexpr std::array<std::string_view, 20> variational_b0 = {
    "0.86602540378443864676", "0.85189520859585272618", "0.84798320787226284162",
    "0.84736735286736694523", "0.84726277296604748829", "0.84722291812428697005",
    "0.84721687569394258505", "0.84721383828896139276", "0.84721340071349571092",
    "0.84721314796371865932", "0.84721311260106078088", "0.84721309038427087031",
    "0.84721308733437656102", "0.84721308530703137833", "0.84721308503241446175",
    "0.84721308484231654612", "0.84721308481682089873", "0.84721308479862454760",
    "0.84721308479620273029", "0.84721308479443254139",
};

inline constexpr std::string_view strong_b0 = "0.8472130847939790866";

// Convergence law ln(rel_error) = alpha + beta N fitted over orders 90..100.
inline constexpr double fit_alpha = -6.7671;
inline constexpr double fit_beta = -1.1113;

} // namespace duffing::reference
