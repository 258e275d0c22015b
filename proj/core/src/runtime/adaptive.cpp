#include "pyx/runtime.hpp"

#include <sstream>

namespace pyx {

double ewma_update(double l_prev, double s_t, double alpha) {
  return alpha * l_prev + (1.0 - alpha) * s_t;
}

LoadTrace LoadTrace::parse(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "pyxload v1")
    throw Diag("format", "bad load trace header");
  LoadTrace t;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    auto toks = split_ws(line);
    if (toks.size() != 2)
      throw Diag("format", "bad load trace line: " + line);
    double at = std::stod(toks[0]);
    double s = std::stod(toks[1]);
    if (s < 0 || s > 100)
      throw Diag("format", "load sample out of [0,100]: " + line);
    if (!t.samples.empty() && at < t.samples.back().first)
      throw Diag("format", "load trace timestamps must not decrease");
    t.samples.emplace_back(at, s);
  }
  return t;
}

std::string LoadTrace::dump() const {
  std::ostringstream os;
  os << "pyxload v1\n";
  for (const auto &[t, s] : samples)
    os << format_double(t) << ' ' << format_double(s) << '\n';
  return os.str();
}

bool AdaptiveState::advance(const LoadTrace &trace, double now_ms, EventLog *log) {
  bool changed = false;
  while (next_sample < trace.samples.size() &&
         trace.samples[next_sample].first <= now_ms) {
    double s = trace.samples[next_sample].second;
    double at = trace.samples[next_sample].first;
    if (!initialized) {
      l = s; // the first sample seeds the average
      initialized = true;
    } else {
      l = ewma_update(l, s, alpha);
    }
    if (log) {
      Event e;
      e.kind = Event::Kind::LoadSample;
      e.t_ms = at;
      e.host = Host::App;
      e.a = static_cast<uint64_t>(next_sample);
      e.detail = "S=" + format_double(s) + " L=" + format_double(l);
      log->add(std::move(e));
    }
    ++next_sample;
    changed = true;
  }
  return changed;
}

size_t AdaptiveState::choose(size_t bundle_count) const {
  if (bundle_count <= 1)
    return 0;
  // loaded server: fall back to the low-budget (APP-heavy) partition
  return l > threshold_pct ? low_budget : high_budget;
}

} // namespace pyx
