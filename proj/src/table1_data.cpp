#include <hopfgd/verify.hpp>

#include <array>

namespace hopfgd {

namespace {

// Tabulated g(e,k); e = 7 stops at k = 16 since g(7,k) = 2^7 beyond it.
constexpr std::array<TableCell, 240> kTable1 = {{
    {7, 1, 0}, {7, 2, 16}, {7, 3, 19}, {7, 4, 32}, {7, 5, 35}, {7, 6, 48}, {7, 7, 51}, {7, 8, 64},
    {7, 9, 67}, {7, 10, 80}, {7, 11, 83}, {7, 12, 96}, {7, 13, 99}, {7, 14, 112}, {7, 15, 115}, {7, 16, 128},
    {8, 1, 0}, {8, 2, 15}, {8, 3, 18}, {8, 4, 32}, {8, 5, 34}, {8, 6, 47}, {8, 7, 50}, {8, 8, 64},
    {8, 9, 66}, {8, 10, 79}, {8, 11, 82}, {8, 12, 96}, {8, 13, 98}, {8, 14, 111}, {8, 15, 114}, {8, 16, 128},
    {8, 17, 130}, {8, 18, 143}, {8, 19, 146}, {8, 20, 160}, {8, 21, 162}, {8, 22, 175}, {8, 23, 178}, {8, 24, 192},
    {8, 25, 194}, {8, 26, 207}, {8, 27, 210}, {8, 28, 224}, {8, 29, 226}, {8, 30, 239}, {8, 31, 242}, {8, 32, 256},
    {9, 1, 0}, {9, 2, 14}, {9, 3, 17}, {9, 4, 31}, {9, 5, 33}, {9, 6, 46}, {9, 7, 49}, {9, 8, 64},
    {9, 9, 66}, {9, 10, 78}, {9, 11, 81}, {9, 12, 95}, {9, 13, 97}, {9, 14, 110}, {9, 15, 113}, {9, 16, 128},
    {9, 17, 130}, {9, 18, 142}, {9, 19, 145}, {9, 20, 159}, {9, 21, 161}, {9, 22, 174}, {9, 23, 177}, {9, 24, 192},
    {9, 25, 194}, {9, 26, 206}, {9, 27, 209}, {9, 28, 223}, {9, 29, 225}, {9, 30, 238}, {9, 31, 241}, {9, 32, 256},
    {10, 1, 0}, {10, 2, 13}, {10, 3, 16}, {10, 4, 30}, {10, 5, 32}, {10, 6, 45}, {10, 7, 48}, {10, 8, 63},
    {10, 9, 65}, {10, 10, 77}, {10, 11, 80}, {10, 12, 94}, {10, 13, 96}, {10, 14, 109}, {10, 15, 112}, {10, 16, 128},
    {10, 17, 130}, {10, 18, 141}, {10, 19, 144}, {10, 20, 158}, {10, 21, 160}, {10, 22, 173}, {10, 23, 176}, {10, 24, 191},
    {10, 25, 193}, {10, 26, 205}, {10, 27, 208}, {10, 28, 222}, {10, 29, 224}, {10, 30, 237}, {10, 31, 240}, {10, 32, 256},
    {11, 1, 0}, {11, 2, 12}, {11, 3, 16}, {11, 4, 29}, {11, 5, 31}, {11, 6, 44}, {11, 7, 47}, {11, 8, 62},
    {11, 9, 64}, {11, 10, 76}, {11, 11, 79}, {11, 12, 93}, {11, 13, 95}, {11, 14, 108}, {11, 15, 111}, {11, 16, 127},
    {11, 17, 129}, {11, 18, 140}, {11, 19, 143}, {11, 20, 157}, {11, 21, 159}, {11, 22, 172}, {11, 23, 175}, {11, 24, 190},
    {11, 25, 192}, {11, 26, 204}, {11, 27, 207}, {11, 28, 221}, {11, 29, 223}, {11, 30, 236}, {11, 31, 239}, {11, 32, 256},
    {12, 1, 0}, {12, 2, 12}, {12, 3, 16}, {12, 4, 28}, {12, 5, 30}, {12, 6, 43}, {12, 7, 46}, {12, 8, 61},
    {12, 9, 63}, {12, 10, 75}, {12, 11, 78}, {12, 12, 92}, {12, 13, 94}, {12, 14, 107}, {12, 15, 110}, {12, 16, 126},
    {12, 17, 128}, {12, 18, 139}, {12, 19, 142}, {12, 20, 156}, {12, 21, 158}, {12, 22, 171}, {12, 23, 174}, {12, 24, 189},
    {12, 25, 191}, {12, 26, 203}, {12, 27, 206}, {12, 28, 220}, {12, 29, 222}, {12, 30, 235}, {12, 31, 238}, {12, 32, 255},
    {13, 1, 0}, {13, 2, 12}, {13, 3, 16}, {13, 4, 27}, {13, 5, 29}, {13, 6, 42}, {13, 7, 45}, {13, 8, 60},
    {13, 9, 62}, {13, 10, 74}, {13, 11, 77}, {13, 12, 91}, {13, 13, 93}, {13, 14, 106}, {13, 15, 109}, {13, 16, 125},
    {13, 17, 127}, {13, 18, 138}, {13, 19, 141}, {13, 20, 155}, {13, 21, 157}, {13, 22, 170}, {13, 23, 173}, {13, 24, 188},
    {13, 25, 190}, {13, 26, 202}, {13, 27, 205}, {13, 28, 219}, {13, 29, 221}, {13, 30, 234}, {13, 31, 237}, {13, 32, 254},
    {14, 1, 0}, {14, 2, 12}, {14, 3, 16}, {14, 4, 26}, {14, 5, 28}, {14, 6, 41}, {14, 7, 44}, {14, 8, 59},
    {14, 9, 61}, {14, 10, 73}, {14, 11, 76}, {14, 12, 90}, {14, 13, 92}, {14, 14, 105}, {14, 15, 108}, {14, 16, 124},
    {14, 17, 126}, {14, 18, 137}, {14, 19, 140}, {14, 20, 154}, {14, 21, 156}, {14, 22, 169}, {14, 23, 172}, {14, 24, 187},
    {14, 25, 189}, {14, 26, 201}, {14, 27, 204}, {14, 28, 218}, {14, 29, 220}, {14, 30, 233}, {14, 31, 236}, {14, 32, 253},
}};

} // namespace

std::span<const TableCell> table1_reference()
{
    return kTable1;
}

} // namespace hopfgd
