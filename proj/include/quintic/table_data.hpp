#pragma once

// Specializations of Y^2 = X^3 - 25t^4 X^2 - 2500 D^2 t^4 with a point of
// infinite order, for D = 1..100.

#include <array>

namespace quintic {

struct TableRowText {
  int D;
  const char* t;
  const char* X;
  const char* Y;
};

inline constexpr std::array<TableRowText, 100> kSpecializationTable{{
    {1, "2/45", "1", "403/405"},
    {2, "2/45", "1", "397/405"},
    {3, "2/7", "25", "6075/49"},
    {4, "2/45", "4/5", "1208/2025"},
    {5, "1/15", "5/4", "61/72"},
    {6, "1/5", "6", "42/5"},
    {7, "1/3", "14", "308/9"},
    {8, "2/15", "25", "1123/9"},
    {9, "1/5", "13", "216/5"},
    {10, "1/3", "25", "1000/9"},
    {11, "1/15", "2", "64/45"},
    {12, "2/11", "25", "14925/121"},
    {13, "7/11", "50", "25800/121"},
    {14, "1/9", "25", "10100/81"},
    {15, "1/9", "6", "308/27"},
    {16, "4/45", "16", "25792/405"},
    {17, "1/5", "17", "306/5"},
    {18, "2/5", "36", "792/5"},
    {19, "1/5", "17", "294/5"},
    {20, "1/3", "25", "500/9"},
    {21, "1/5", "42", "1344/5"},
    {22, "1/3", "25", "200/9"},
    {23, "4/21", "25", "51925/441"},
    {24, "3/25", "9", "2592/125"},
    {25, "10/51", "25", "299875/2601"},
    {26, "11/15", "169", "91468/45"},
    {27, "8/25", "32", "14464/125"},
    {28, "1/9", "29/4", "5873/648"},
    {29, "1/9", "50", "28600/81"},
    {30, "2/7", "25", "1125/49"},
    {31, "6/35", "25", "5701/49"},
    {32, "4/45", "16", "25408/405"},
    {33, "1/5", "22", "396/5"},
    {34, "4/21", "16", "7424/441"},
    {35, "1/5", "17", "6/5"},
    {36, "1/5", "18", "126/5"},
    {37, "1/65", "82/65", "74016/54925"},
    {38, "6/35", "25", "5477/49"},
    {39, "1/45", "6/5", "604/675"},
    {40, "3/13", "25", "11000/169"},
    {41, "1/5", "125/4", "1233/8"},
    {42, "1/13", "6", "102/13"},
    {43, "1/45", "10", "2560/81"},
    {44, "5/21", "25", "2000/441"},
    {45, "1/34", "25/16", "375/2312"},
    {46, "1/15", "46/5", "5842/225"},
    {47, "12/53", "25", "91925/2809"},
    {48, "1/34", "17/8", "21261/9248"},
    {49, "1/3", "49", "1862/9"},
    {50, "1/45", "13/4", "18557/3240"},
    {51, "2/35", "17", "17051/245"},
    {52, "1/15", "26/5", "598/225"},
    {53, "1/39", "25/16", "85925/97344"},
    {54, "4/25", "17", "1429/125"},
    {55, "1/95", "5/4", "3939/2888"},
    {56, "1/15", "34/5", "2842/225"},
    {57, "3/35", "38/5", "836/1225"},
    {58, "1/5", "29", "522/5"},
    {59, "2/15", "25", "1021/9"},
    {60, "1/17", "25", "36000/289"},
    {61, "2/15", "20", "640/9"},
    {62, "4/5", "164", "2232/5"},
    {63, "14/43", "49", "136857/1849"},
    {64, "4/45", "64/5", "77312/2025"},
    {65, "2/5", "65", "39"},
    {66, "1/15", "6", "14/15"},
    {67, "8/35", "32", "11136/245"},
    {68, "1/15", "10", "250/9"},
    {69, "1/35", "2", "64/245"},
    {70, "1/9", "25", "9500/81"},
    {71, "4/141", "25", "2484475/19881"},
    {72, "5/31", "25", "79500/961"},
    {73, "1/25", "73/20", "19053/5000"},
    {74, "1/90", "37/40", "49469/64800"},
    {75, "2/11", "25", "1875/121"},
    {76, "3/29", "25", "99400/841"},
    {77, "1/15", "34", "8888/45"},
    {78, "1/5", "29", "22/5"},
    {79, "2", "2084", "84048"},
    {80, "2/15", "20", "488/9"},
    {81, "2/15", "81", "3627/5"},
    {82, "2/171", "1", "24209/29241"},
    {83, "1/9", "34", "15512/81"},
    {84, "1/35", "42/5", "4218/175"},
    {85, "2/165", "1", "4253/5445"},
    {86, "2/3", "344", "54352/9"},
    {87, "1/15", "5597/324", "2016283/29160"},
    {88, "1/61", "61/36", "1496489/803736"},
    {89, "1", "8381", "766104"},
    {90, "5/31", "25", "42000/961"},
    {91, "1/85", "26", "191568/1445"},
    {92, "2", "2516", "114264"},
    {93, "1/22", "93/8", "148893/3872"},
    {94, "2/5", "89", "1833/5"},
    {95, "1/5", "38", "684/5"},
    {96, "5/31", "25", "4500/961"},
    {97, "4/15", "97", "40061/45"},
    {98, "1/3", "6125/81", "267050/729"},
    {99, "1/7", "50", "16600/49"},
    {100, "2/15", "20", "88/9"},
}};

}  // namespace quintic
