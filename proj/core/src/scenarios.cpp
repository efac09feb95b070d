#include "pagecusum/scenarios.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <regex>

#include "pagecusum/error.hpp"

namespace pagecusum {

namespace {

// Empirical sizes, 5000 replications, horizon 5m. Columns: gamma 0 / 0.25 / 0.49,
// each at alpha 0.05 then 0.10. Rows: m = 100, 200, 500, 1000.
struct SizeTable {
  const char* detector;
  double values[4][6];
};

constexpr std::array<std::size_t, 4> kSizeMs = {100, 200, 500, 1000};
constexpr std::array<double, 3> kSizeGammas = {0.0, 0.25, 0.49};
constexpr std::array<double, 2> kSizeAlphas = {0.05, 0.10};

constexpr SizeTable kTable3[] = {
    {"QP", {{0.0298, 0.0698, 0.0390, 0.0802, 0.0168, 0.0334},
            {0.0294, 0.0646, 0.0364, 0.0760, 0.0194, 0.0382},
            {0.0286, 0.0682, 0.0368, 0.0812, 0.0248, 0.0470},
            {0.0300, 0.0704, 0.0408, 0.0842, 0.0272, 0.0554}}},
    {"QPu", {{0.0354, 0.0770, 0.0438, 0.0818, 0.0166, 0.0364},
             {0.0338, 0.0720, 0.0418, 0.0806, 0.0194, 0.0382},
             {0.0342, 0.0752, 0.0430, 0.0880, 0.0256, 0.0466},
             {0.0350, 0.0766, 0.0432, 0.0852, 0.0256, 0.0510}}},
};

constexpr SizeTable kTable4[] = {
    {"SP", {{0.0890, 0.1358, 0.1072, 0.1624, 0.1130, 0.1408},
            {0.0598, 0.0976, 0.0718, 0.1210, 0.0912, 0.1190},
            {0.0416, 0.0804, 0.0548, 0.0998, 0.0826, 0.1152},
            {0.0392, 0.0794, 0.0520, 0.0958, 0.0856, 0.1178}}},
    {"SRabs", {{0.0826, 0.1246, 0.1014, 0.1504, 0.1122, 0.1408},
               {0.0550, 0.0888, 0.0676, 0.1118, 0.0898, 0.1176},
               {0.0396, 0.0756, 0.0526, 0.0916, 0.0784, 0.1112},
               {0.0358, 0.0748, 0.0488, 0.0908, 0.0788, 0.1152}}},
    {"SPu", {{0.1292, 0.1932, 0.1570, 0.2172, 0.1404, 0.1836},
             {0.0898, 0.1516, 0.1142, 0.1814, 0.1174, 0.1560},
             {0.0676, 0.1222, 0.0852, 0.1416, 0.1124, 0.1514},
             {0.0604, 0.1094, 0.0760, 0.1326, 0.1116, 0.1578}}},
    {"SR", {{0.1196, 0.1832, 0.1452, 0.2082, 0.1410, 0.1812},
            {0.0812, 0.1426, 0.1066, 0.1702, 0.1162, 0.1574},
            {0.0636, 0.1178, 0.0792, 0.1334, 0.1100, 0.1492},
            {0.0566, 0.1016, 0.0708, 0.1222, 0.1074, 0.1520}}},
};

// Delay five-number summaries under H1 (alpha = 0.1). table: 6 -> k* = 1,
// 7 -> k* = m, 8 -> k* = 5m.
struct DelayRow {
  int table;
  double gamma;
  std::size_t m;
  const char* detector;
  double summary[5];
};

constexpr DelayRow kDelayRows[] = {
    {6, 0.00, 200, "QP", {15, 39, 48, 60, 159}},
    {6, 0.00, 1000, "QP", {48, 84, 96, 110, 191}},
    {6, 0.00, 200, "Qabs", {14, 39, 48, 60, 159}},
    {6, 0.00, 1000, "Qabs", {48, 84, 95, 109, 189}},
    {6, 0.00, 200, "QPu", {11, 31, 39, 49, 142}},
    {6, 0.00, 1000, "QPu", {38, 70, 80, 92, 179}},
    {6, 0.00, 200, "Qu", {11, 31, 39, 49, 143}},
    {6, 0.00, 1000, "Qu", {38, 68, 79, 91, 177}},
    {6, 0.00, 200, "SP", {3, 32, 46, 68, 558}},
    {6, 0.00, 1000, "SP", {22, 76, 96, 120, 256}},
    {6, 0.00, 200, "SRabs", {3, 32, 47, 69, 558}},
    {6, 0.00, 1000, "SRabs", {22, 75, 96, 120, 263}},
    {6, 0.00, 200, "SPu", {3, 25, 38, 56, 449}},
    {6, 0.00, 1000, "SPu", {11, 62, 80, 102, 251}},
    {6, 0.00, 200, "SR", {3, 25, 38, 57, 451}},
    {6, 0.00, 1000, "SR", {11, 61, 80, 101, 251}},
    {6, 0.25, 200, "QP", {4, 20, 28, 38, 144}},
    {6, 0.25, 1000, "QP", {12, 35, 44, 56, 146}},
    {6, 0.25, 200, "Qabs", {4, 20, 28, 39, 144}},
    {6, 0.25, 1000, "Qabs", {11, 34, 44, 55, 148}},
    {6, 0.25, 200, "QPu", {4, 16, 22, 31, 108}},
    {6, 0.25, 1000, "QPu", {9, 28, 37, 47, 135}},
    {6, 0.25, 200, "Qu", {3, 15, 22, 31, 107}},
    {6, 0.25, 1000, "Qu", {8, 27, 36, 46, 135}},
    {6, 0.25, 200, "SP", {1, 14, 26, 44, 558}},
    {6, 0.25, 1000, "SP", {1, 28, 44, 64, 216}},
    {6, 0.25, 200, "SRabs", {1, 15, 27, 46, 558}},
    {6, 0.25, 1000, "SRabs", {1, 29, 44, 64, 217}},
    {6, 0.25, 200, "SPu", {1, 11, 21, 37, 451}},
    {6, 0.25, 1000, "SPu", {1, 22, 36, 54, 202}},
    {6, 0.25, 200, "SR", {1, 11, 22, 38, 451}},
    {6, 0.25, 1000, "SR", {1, 22, 35, 53, 196}},
    {6, 0.49, 200, "QP", {1, 9, 17, 29, 148}},
    {6, 0.49, 1000, "QP", {1, 9, 16, 26, 135}},
    {6, 0.49, 200, "Qabs", {1, 9, 17, 28, 148}},
    {6, 0.49, 1000, "Qabs", {1, 9, 16, 26, 133}},
    {6, 0.49, 200, "QPu", {1, 8, 14, 24, 137}},
    {6, 0.49, 1000, "QPu", {1, 8, 13, 22, 124}},
    {6, 0.49, 200, "Qu", {1, 7, 14, 24, 144}},
    {6, 0.49, 1000, "Qu", {1, 7, 13, 22, 117}},
    {6, 0.49, 200, "SP", {1, 6, 15, 33, 1888}},
    {6, 0.49, 1000, "SP", {1, 6, 14, 30, 211}},
    {6, 0.49, 200, "SRabs", {1, 6, 16, 35, 1460}},
    {6, 0.49, 1000, "SRabs", {1, 6, 15, 32, 200}},
    {6, 0.49, 200, "SPu", {1, 5, 13, 29, 1269}},
    {6, 0.49, 1000, "SPu", {1, 5, 12, 27, 197}},
    {6, 0.49, 200, "SR", {1, 5, 13, 30, 838}},
    {6, 0.49, 1000, "SR", {1, 5, 13, 28, 190}},
    {7, 0.00, 200, "QP", {1, 59, 79, 101, 289}},
    {7, 0.00, 1000, "QP", {4, 126, 159, 189, 318}},
    {7, 0.00, 200, "Qabs", {1, 66, 95, 131, 443}},
    {7, 0.00, 1000, "Qabs", {9, 143, 193, 248, 476}},
    {7, 0.00, 200, "QPu", {1, 45, 63, 82, 261}},
    {7, 0.00, 1000, "QPu", {1, 98, 129, 157, 263}},
    {7, 0.00, 200, "Qu", {2, 51, 78, 110, 450}},
    {7, 0.00, 1000, "Qu", {1, 113, 160, 214, 558}},
    {7, 0.00, 200, "SP", {1, 46, 75, 112, 2200}},
    {7, 0.00, 1000, "SP", {2, 114, 156, 200, 467}},
    {7, 0.00, 200, "SRabs", {1, 53, 90, 141, 2200}},
    {7, 0.00, 1000, "SRabs", {6, 130, 188, 258, 767}},
    {7, 0.00, 200, "SPu", {1, 36, 60, 91, 1593}},
    {7, 0.00, 1000, "SPu", {1, 90, 127, 165, 403}},
    {7, 0.00, 200, "SR", {1, 41, 74, 117, 1595}},
    {7, 0.00, 1000, "SR", {1, 103, 157, 222, 650}},
    {7, 0.25, 200, "QP", {2, 54, 73, 96, 289}},
    {7, 0.25, 1000, "QP", {3, 113, 145, 175, 305}},
    {7, 0.25, 200, "Qabs", {1, 61, 89, 124, 423}},
    {7, 0.25, 1000, "Qabs", {2, 129, 177, 231, 451}},
    {7, 0.25, 200, "QPu", {1, 43, 62, 80, 290}},
    {7, 0.25, 1000, "QPu", {1, 93, 124, 150, 256}},
    {7, 0.25, 200, "Qu", {1, 49, 75, 108, 464}},
    {7, 0.25, 1000, "Qu", {1, 107, 153, 206, 556}},
    {7, 0.25, 200, "SP", {1, 43, 71, 107, 2200}},
    {7, 0.25, 1000, "SP", {3, 104, 143, 186, 436}},
    {7, 0.25, 200, "SRabs", {1, 49, 85, 136, 2200}},
    {7, 0.25, 1000, "SRabs", {3, 118, 175, 242, 731}},
    {7, 0.25, 200, "SPu", {1, 36, 60, 91, 1644}},
    {7, 0.25, 1000, "SPu", {1, 87, 122, 159, 380}},
    {7, 0.25, 200, "SR", {1, 41, 73, 117, 1726}},
    {7, 0.25, 1000, "SR", {1, 99, 151, 215, 648}},
    {7, 0.49, 200, "QP", {3, 77, 103, 133, 490}},
    {7, 0.49, 1000, "QP", {14, 153, 189, 223, 386}},
    {7, 0.49, 200, "Qabs", {2, 81, 115, 160, 658}},
    {7, 0.49, 1000, "Qabs", {15, 162, 214, 273, 526}},
    {7, 0.49, 200, "QPu", {2, 67, 91, 119, 430}},
    {7, 0.49, 1000, "QPu", {6, 136, 170, 202, 342}},
    {7, 0.49, 200, "Qu", {1, 71, 103, 144, 569}},
    {7, 0.49, 1000, "Qu", {7, 144, 196, 254, 631}},
    {7, 0.49, 200, "SP", {2, 63, 100, 155, 2200}},
    {7, 0.49, 1000, "SP", {1, 140, 187, 237, 641}},
    {7, 0.49, 200, "SRabs", {1, 67, 111, 181, 2200}},
    {7, 0.49, 1000, "SRabs", {5, 151, 212, 288, 890}},
    {7, 0.49, 200, "SPu", {1, 55, 90, 138, 2200}},
    {7, 0.49, 1000, "SPu", {2, 125, 169, 217, 522}},
    {7, 0.49, 200, "SR", {1, 59, 100, 163, 2200}},
    {7, 0.49, 1000, "SR", {3, 135, 194, 267, 826}},
    {8, 0.00, 200, "QP", {2, 182, 256, 313, 550}},
    {8, 0.00, 1000, "QP", {11, 382, 506, 581, 785}},
    {8, 0.00, 200, "Qabs", {2, 191, 293, 412, 933}},
    {8, 0.00, 1000, "Qabs", {6, 404, 577, 777, 1436}},
    {8, 0.00, 200, "QPu", {3, 152, 212, 259, 489}},
    {8, 0.00, 1000, "QPu", {5, 319, 425, 490, 666}},
    {8, 0.00, 200, "Qu", {2, 158, 252, 366, 1199}},
    {8, 0.00, 1000, "Qu", {2, 340, 503, 700, 1826}},
    {8, 0.00, 200, "SP", {2, 150, 234, 331, 3000}},
    {8, 0.00, 1000, "SP", {6, 352, 492, 601, 1074}},
    {8, 0.00, 200, "SRabs", {1, 158, 263, 418, 3000}},
    {8, 0.00, 1000, "SRabs", {1, 369, 566, 777, 1817}},
    {8, 0.00, 200, "SPu", {1, 126, 198, 278, 1634}},
    {8, 0.00, 1000, "SPu", {13, 296, 414, 511, 1027}},
    {8, 0.00, 200, "SR", {1, 133, 225, 366, 3000}},
    {8, 0.00, 1000, "SR", {5, 311, 491, 696, 1938}},
    {8, 0.25, 200, "QP", {7, 199, 276, 335, 608}},
    {8, 0.25, 1000, "QP", {8, 411, 537, 613, 826}},
    {8, 0.25, 200, "Qabs", {3, 205, 310, 432, 1035}},
    {8, 0.25, 1000, "Qabs", {8, 427, 601, 801, 1471}},
    {8, 0.25, 200, "QPu", {2, 172, 236, 288, 604}},
    {8, 0.25, 1000, "QPu", {2, 357, 466, 533, 713}},
    {8, 0.25, 200, "Qu", {2, 176, 273, 391, 1248}},
    {8, 0.25, 1000, "Qu", {9, 372, 536, 737, 1857}},
    {8, 0.25, 200, "SP", {3, 166, 255, 361, 3000}},
    {8, 0.25, 1000, "SP", {11, 384, 523, 638, 1228}},
    {8, 0.25, 200, "SRabs", {1, 172, 280, 443, 3000}},
    {8, 0.25, 1000, "SRabs", {15, 395, 593, 808, 1895}},
    {8, 0.25, 200, "SPu", {2, 142, 221, 311, 3000}},
    {8, 0.25, 1000, "SPu", {15, 333, 456, 555, 1123}},
    {8, 0.25, 200, "SR", {3, 149, 247, 395, 3000}},
    {8, 0.25, 1000, "SR", {3, 343, 527, 733, 1977}},
    {8, 0.49, 200, "QP", {1, 326, 430, 526, 1089}},
    {8, 0.49, 1000, "QP", {34, 638, 785, 876, 1203}},
    {8, 0.49, 200, "Qabs", {23, 315, 450, 610, 1577}},
    {8, 0.49, 1000, "Qabs", {17, 622, 819, 1049, 1898}},
    {8, 0.49, 200, "QPu", {12, 292, 386, 469, 977}},
    {8, 0.49, 1000, "QPu", {30, 578, 715, 802, 1085}},
    {8, 0.49, 200, "Qu", {13, 278, 402, 553, 1679}},
    {8, 0.49, 1000, "Qu", {19, 558, 746, 975, 7000}},
    {8, 0.49, 200, "SP", {11, 268, 399, 574, 3000}},
    {8, 0.49, 1000, "SP", {36, 595, 766, 912, 1584}},
    {8, 0.49, 200, "SRabs", {3, 256, 407, 641, 3000}},
    {8, 0.49, 1000, "SRabs", {22, 580, 808, 1059, 7000}},
    {8, 0.49, 200, "SPu", {1, 239, 356, 508, 3000}},
    {8, 0.49, 1000, "SPu", {6, 537, 700, 833, 1468}},
    {8, 0.49, 200, "SR", {6, 226, 363, 575, 3000}},
    {8, 0.49, 1000, "SR", {3, 516, 736, 977, 7000}},
};

// Delay summaries under H2, m = 1000, gamma = 0, alpha = 0.1.
struct OrthogonalRow {
  const char* k_star;
  const char* detector;
  double summary[5];
};

constexpr OrthogonalRow kTable9[] = {
    {"1", "SP", {10, 58, 75, 94, 235}},
    {"1", "SRabs", {10, 58, 75, 94, 235}},
    {"1", "SPu", {8, 48, 63, 80, 178}},
    {"1", "SR", {8, 47, 62, 79, 178}},
    {"m", "SP", {2, 86, 119, 155, 353}},
    {"m", "SRabs", {2, 98, 144, 196, 537}},
    {"m", "SPu", {1, 68, 98, 129, 293}},
    {"m", "SR", {1, 78, 121, 169, 493}},
    {"5m", "SP", {4, 271, 376, 461, 823}},
    {"5m", "SRabs", {4, 287, 435, 590, 1345}},
    {"5m", "SPu", {7, 228, 317, 392, 676}},
    {"5m", "SR", {6, 243, 380, 532, 1526}},
};

std::string gamma_token(double gamma) {
  if (gamma == 0.0) return "0";
  return gamma == 0.25 ? "025" : "049";
}

std::string alpha_token(double alpha) { return alpha == 0.05 ? "05" : "10"; }

double parse_gamma_token(const std::string& token) {
  if (token == "0") return 0.0;
  if (token == "025") return 0.25;
  if (token == "049") return 0.49;
  return -1.0;
}

std::size_t to_size(const std::string& s) {
  std::size_t v = 0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

FiveNumberSummary summary_of(const double (&v)[5]) { return {v[0], v[1], v[2], v[3], v[4]}; }

ExperimentSpec base_spec() {
  ExperimentSpec spec;
  spec.p = 2;
  spec.beta0 = {1.0, 1.0};
  spec.error_sigma2 = 0.5;
  spec.garch = GarchSpec{0.5, 0.2, 0.3, 1.0};
  spec.lrv = LrvConfig{std::nullopt, true};
  spec.master_seed = 20'140'101;
  return spec;
}

[[noreturn]] void unknown(std::string_view name) {
  fail(ErrorCode::UnknownScenario, "unknown scenario '" + std::string(name) + "' (try `pagecusum reproduce --list`)");
}

std::optional<Scenario> size_scenario(const std::string& name) {
  static const std::regex pattern(R"(table([34])-m(\d+)-gamma(0|025|049)(?:-a(05|10))?(?:-([A-Za-z]+))?)");
  std::smatch match;
  if (!std::regex_match(name, match, pattern)) return std::nullopt;
  const int table = match[1].str() == "3" ? 3 : 4;
  const std::size_t m = to_size(match[2].str());
  const double gamma = parse_gamma_token(match[3].str());
  const double alpha = match[4].str() == "10" ? 0.10 : 0.05;
  const std::string det = match[5].str();

  const auto m_it = std::find(kSizeMs.begin(), kSizeMs.end(), m);
  if (m_it == kSizeMs.end()) return std::nullopt;
  const auto row = static_cast<std::size_t>(m_it - kSizeMs.begin());
  const auto gcol = static_cast<std::size_t>(std::find(kSizeGammas.begin(), kSizeGammas.end(), gamma) -
                                             kSizeGammas.begin());
  const std::size_t col = 2 * gcol + (alpha == 0.05 ? 0 : 1);

  const std::span<const SizeTable> tables = table == 3 ? std::span<const SizeTable>(kTable3)
                                                       : std::span<const SizeTable>(kTable4);
  Scenario s;
  s.name = name;
  s.description = "empirical size, horizon 5m";
  s.spec = base_spec();
  s.spec.m = m;
  s.spec.gamma = gamma;
  s.spec.alpha = alpha;
  s.spec.reps = kDeskSizeReps;
  s.spec.detectors.clear();
  for (const auto& t : tables) {
    if (!det.empty() && det != t.detector) continue;
    const DetectorKind kind = parse_detector(t.detector);
    s.spec.detectors.push_back(kind);
    s.reference.push_back({kind, ReferenceValue{t.values[row][col], std::nullopt}});
  }
  if (s.spec.detectors.empty()) return std::nullopt;
  return s;
}

std::optional<Scenario> delay_scenario(const std::string& name) {
  static const std::regex pattern(R"(table([678])-m(200|1000)-gamma(0|025|049)(?:-([A-Za-z]+?))?(-median)?)");
  std::smatch match;
  if (!std::regex_match(name, match, pattern)) return std::nullopt;
  const int table = match[1].str()[0] - '0';
  const std::size_t m = to_size(match[2].str());
  const double gamma = parse_gamma_token(match[3].str());
  std::string only = match[4].str();

  Scenario s;
  s.name = name;
  s.median_only = match[5].matched;
  if (only == "median") {
    only.clear();
    s.median_only = true;
  }
  s.spec = base_spec();
  s.spec.m = m;
  s.spec.gamma = gamma;
  s.spec.alpha = 0.10;
  s.spec.reps = kDeskDelayReps;
  const std::size_t k_star = table == 6 ? 1 : table == 7 ? m : 5 * m;
  s.spec.change = ChangeSpec{k_star, h1_delta()};
  s.description = "delay under H1, k* = " + std::to_string(k_star);
  s.spec.detectors.clear();
  for (const auto& row : kDelayRows) {
    if (row.table != table || row.m != m || row.gamma != gamma) continue;
    if (!only.empty() && only != row.detector) continue;
    const DetectorKind kind = parse_detector(row.detector);
    s.spec.detectors.push_back(kind);
    s.reference.push_back({kind, ReferenceValue{std::nullopt, summary_of(row.summary)}});
  }
  if (s.spec.detectors.empty()) return std::nullopt;
  return s;
}

std::optional<Scenario> orthogonal_scenario(const std::string& name) {
  static const std::regex pattern(R"(table9-kstar(1|m|5m)(?:-([A-Za-z]+?))?(-median)?)");
  std::smatch match;
  if (!std::regex_match(name, match, pattern)) return std::nullopt;
  const std::string k_token = match[1].str();
  std::string only = match[2].str();

  Scenario s;
  s.name = name;
  s.median_only = match[3].matched;
  if (only == "median") {
    only.clear();
    s.median_only = true;
  }
  s.spec = base_spec();
  s.spec.m = 1000;
  s.spec.gamma = 0.0;
  s.spec.alpha = 0.10;
  s.spec.reps = kDeskDelayReps;
  const std::size_t k_star = k_token == "1" ? 1 : k_token == "m" ? s.spec.m : 5 * s.spec.m;
  s.spec.change = ChangeSpec{k_star, h2_delta()};
  s.description = "delay under H2, k* = " + std::to_string(k_star);
  s.spec.detectors.clear();
  for (const auto& row : kTable9) {
    if (k_token != row.k_star) continue;
    if (!only.empty() && only != row.detector) continue;
    const DetectorKind kind = parse_detector(row.detector);
    s.spec.detectors.push_back(kind);
    s.reference.push_back({kind, ReferenceValue{std::nullopt, summary_of(row.summary)}});
  }
  if (s.spec.detectors.empty()) return std::nullopt;
  return s;
}

Scenario orthogonal_detection(const std::string& name, bool squared) {
  Scenario s;
  s.name = name;
  s.description = "detection under H2 (d^T Delta = 0), m = 200, gamma = 0, k* = 1";
  s.spec = base_spec();
  s.spec.m = 200;
  s.spec.gamma = 0.0;
  s.spec.alpha = 0.10;
  s.spec.reps = kDeskDelayReps;
  s.spec.change = ChangeSpec{1, h2_delta()};
  if (squared) {
    s.spec.detectors = {DetectorKind::SqPageTwoSided, DetectorKind::SqCusumAbs, DetectorKind::SqPageUp,
                        DetectorKind::SqCusumRaw};
  } else {
    s.spec.detectors = {DetectorKind::PageTwoSided, DetectorKind::CusumAbs, DetectorKind::PageUp,
                        DetectorKind::CusumRaw};
  }
  return s;
}

}  // namespace

std::vector<double> h1_delta() { return {0.0, 0.5}; }
std::vector<double> h2_delta() { return {-0.8, 0.8}; }

std::optional<ReferenceValue> Scenario::reference_for(DetectorKind kind) const {
  for (const auto& [k, v] : reference) {
    if (k == kind) return v;
  }
  return std::nullopt;
}

Scenario make_scenario(std::string_view name) {
  const std::string key(name);
  if (key == "h2-residual-detectors") return orthogonal_detection(key, false);
  if (key == "h2-squared-detectors") return orthogonal_detection(key, true);
  if (auto s = size_scenario(key)) return *s;
  if (auto s = delay_scenario(key)) return *s;
  if (auto s = orthogonal_scenario(key)) return *s;
  unknown(name);
}

std::vector<std::string> scenario_names() {
  std::vector<std::string> names;
  for (int table : {3, 4}) {
    const std::span<const SizeTable> tables = table == 3 ? std::span<const SizeTable>(kTable3)
                                                         : std::span<const SizeTable>(kTable4);
    for (const auto& t : tables) {
      for (std::size_t m : kSizeMs) {
        for (double g : kSizeGammas) {
          for (double a : kSizeAlphas) {
            names.push_back("table" + std::to_string(table) + "-m" + std::to_string(m) + "-gamma" + gamma_token(g) +
                            "-a" + alpha_token(a) + "-" + t.detector);
          }
        }
      }
    }
  }
  for (int table : {6, 7, 8}) {
    for (std::size_t m : {200, 1000}) {
      for (double g : kSizeGammas) {
        names.push_back("table" + std::to_string(table) + "-m" + std::to_string(m) + "-gamma" + gamma_token(g));
      }
    }
  }
  for (const char* k : {"1", "m", "5m"}) names.push_back(std::string("table9-kstar") + k);
  names.emplace_back("h2-residual-detectors");
  names.emplace_back("h2-squared-detectors");
  return names;
}

}  // namespace pagecusum
