#include "optfprl/export.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace optfprl {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

}  // namespace

void export_csv(const Trace& trace, const MetricsReport& report, const RunConfig& config,
                const std::string& path) {
  std::ofstream out = open_out(path);
  const bool is_optfprl = config.algo == Algo::optfprl;
  const std::string algo = algo_name(config.algo);
  const std::string strategy = is_optfprl ? strategy_name(config.strategy.kind) : "";

  out << "# scenario=" << config.scenario.id << " algo=" << algo;
  if (is_optfprl) out << " strategy=" << strategy << " cadence=" << config.prune_cadence;
  out << " horizon=" << config.scenario.horizon << " dim=" << config.scenario.dim
      << " radius=" << fmt(config.scenario.set.radius()) << " seed=" << config.scenario.seed
      << "\n";
  out << "# regret_cum=" << fmt(report.regret_cum) << " path_length=" << fmt(report.path_len)
      << " energy=" << fmt(report.energy) << " hybrid=" << fmt(report.hybrid)
      << " corrective=" << fmt(report.corrective);
  if (report.bound_value)
    out << " bound=" << fmt(*report.bound_value)
        << " bound_satisfied=" << (report.bound_satisfied ? 1 : 0);
  out << "\n";
  out << "t,algo,strategy,loss,comparator_loss,regret_cum,regret_avg,epsilon,sigma_cum,"
         "state_norm,pruned,delta\n";

  double regret = 0.0;
  for (std::size_t i = 0; i < trace.slots.size(); ++i) {
    const SlotRecord& s = trace.slots[i];
    regret += s.loss - s.comparator_loss;
    const double t = static_cast<double>(i + 1);
    out << (i + 1) << ',' << algo << ',' << strategy << ',' << fmt(s.loss) << ','
        << fmt(s.comparator_loss) << ',' << fmt(regret) << ',' << fmt(regret / t) << ','
        << fmt(s.epsilon) << ',' << fmt(s.sigma_cum) << ',' << fmt(s.state_norm) << ','
        << (s.pruned ? 1 : 0) << ',';
    if (s.delta_t) out << fmt(*s.delta_t);
    out << "\n";
  }
}

void render_chart(const std::vector<std::pair<std::string, const Trace*>>& traces,
                  const std::string& path) {
  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  constexpr int kWidth = 960, kHeight = 600;
  constexpr double kLeft = 70, kRight = 930, kTop = 40, kBottom = 540;

  long max_t = 1;
  double max_y = 0.0;
  std::vector<std::vector<double>> curves;
  for (const auto& [label, trace] : traces) {
    (void)label;
    std::vector<double> avg;
    double regret = 0.0;
    for (std::size_t i = 0; i < trace->slots.size(); ++i) {
      regret += trace->slots[i].loss - trace->slots[i].comparator_loss;
      avg.push_back(regret / static_cast<double>(i + 1));
      if (avg.back() > max_y) max_y = avg.back();
    }
    max_t = std::max(max_t, static_cast<long>(avg.size()));
    curves.push_back(std::move(avg));
  }
  if (max_y <= 0.0) max_y = 1.0;

  const auto sx = [&](double t) { return kLeft + (kRight - kLeft) * (t - 1.0) / std::max(1.0, max_t - 1.0); };
  const auto sy = [&](double y) { return kBottom - (kBottom - kTop) * y / max_y; };

  std::ofstream out = open_out(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  out << "<line x1=\"" << fmt2(kLeft) << "\" y1=\"" << fmt2(kBottom) << "\" x2=\"" << fmt2(kRight)
      << "\" y2=\"" << fmt2(kBottom) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << fmt2(kLeft) << "\" y1=\"" << fmt2(kTop) << "\" x2=\"" << fmt2(kLeft)
      << "\" y2=\"" << fmt2(kBottom) << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double ty = max_y * i / 5.0;
    out << "<text x=\"" << fmt2(kLeft - 8) << "\" y=\"" << fmt2(sy(ty) + 4)
        << "\" font-size=\"12\" text-anchor=\"end\">" << fmt2(ty) << "</text>\n";
    const double tx = 1.0 + (max_t - 1.0) * i / 5.0;
    out << "<text x=\"" << fmt2(sx(tx)) << "\" y=\"" << fmt2(kBottom + 18)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << static_cast<long>(tx) << "</text>\n";
  }
  out << "<text x=\"" << fmt2((kLeft + kRight) / 2) << "\" y=\"" << fmt2(kBottom + 40)
      << "\" font-size=\"14\" text-anchor=\"middle\">t</text>\n";
  out << "<text x=\"18\" y=\"" << fmt2((kTop + kBottom) / 2)
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << fmt2((kTop + kBottom) / 2) << ")\">average regret</text>\n";

  for (std::size_t k = 0; k < curves.size(); ++k) {
    const char* color = kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < curves[k].size(); ++i) {
      if (i) out << ' ';
      out << fmt2(sx(static_cast<double>(i + 1))) << ',' << fmt2(sy(curves[k][i]));
    }
    out << "\"/>\n";
    // legend entry
    const double ly = kTop + 10 + 18.0 * static_cast<double>(k);
    out << "<line x1=\"" << fmt2(kRight - 180) << "\" y1=\"" << fmt2(ly) << "\" x2=\""
        << fmt2(kRight - 150) << "\" y2=\"" << fmt2(ly) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << fmt2(kRight - 144) << "\" y=\"" << fmt2(ly + 4)
        << "\" font-size=\"12\">" << traces[k].first << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace optfprl
