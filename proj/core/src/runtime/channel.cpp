#include "pyx/runtime.hpp"

#include <sstream>

namespace pyx {

namespace {
const char *event_name(Event::Kind k) {
  switch (k) {
  case Event::Kind::BlockStart: return "block";
  case Event::Kind::Send: return "send";
  case Event::Kind::Recv: return "recv";
  case Event::Kind::SessionStart: return "session-start";
  case Event::Kind::SessionEnd: return "session-end";
  case Event::Kind::LoadSample: return "load";
  case Event::Kind::PartitionSwitch: return "switch";
  }
  return "?";
}
} // namespace

std::string EventLog::dump() const {
  std::ostringstream os;
  os << "pyxevents v1\n";
  for (const auto &e : events) {
    os << format_double(e.t_ms) << ' ' << host_name(e.host) << ' '
       << event_name(e.kind) << ' ' << e.a << ' ' << e.b;
    if (!e.detail.empty())
      os << ' ' << e.detail;
    os << '\n';
  }
  return os.str();
}

// Exactly one host executes blocks at any time: execution stays on the
// active host, and only a send/recv pair moves activity to the peer.
bool EventLog::single_thread_of_control() const {
  Host active = Host::App;
  bool in_session = false;
  for (const auto &e : events) {
    switch (e.kind) {
    case Event::Kind::SessionStart:
      active = Host::App;
      in_session = true;
      break;
    case Event::Kind::SessionEnd:
      in_session = false;
      break;
    case Event::Kind::BlockStart:
      if (in_session && e.host != active)
        return false;
      break;
    case Event::Kind::Send:
      if (in_session && e.host != active)
        return false;
      break;
    case Event::Kind::Recv:
      active = e.host;
      break;
    default:
      break;
    }
  }
  return true;
}

} // namespace pyx
