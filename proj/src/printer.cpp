#include "deltaarc/printer.hpp"

#include <sstream>

namespace deltaarc {

std::string pretty_print(const ComponentDefinition& c) {
  std::ostringstream out;
  out << "component " << c.name;
  if (!c.parameters.empty()) {
    out << '(';
    for (std::size_t i = 0; i < c.parameters.size(); ++i) {
      out << (i ? ", " : "") << c.parameters[i].name;
    }
    out << ')';
  }

  std::vector<ConnectorDecl> connectors;
  for (const auto& conn : c.connectors) {
    if (conn.origin == ConnectorOrigin::Explicit) connectors.push_back(conn);
  }

  const bool empty = c.autoconnect == AutoconnectMode::Off && c.ports.empty() &&
                     c.subcomponents.empty() && connectors.empty();
  if (empty) {
    out << " { }\n";
    return out.str();
  }
  out << " {\n";

  bool need_gap = false;
  const auto section = [&] {
    if (need_gap) out << '\n';
    need_gap = true;
  };

  if (c.autoconnect != AutoconnectMode::Off) {
    section();
    out << "  autoconnect " << to_string(c.autoconnect) << ";\n";
  }

  if (!c.ports.empty()) {
    section();
    out << "  port";
    bool first = true;
    for (Direction dir : {Direction::In, Direction::Out}) {
      for (const auto& p : c.ports) {
        if (p.direction != dir) continue;
        out << (first ? "\n" : ",\n") << "    " << to_string(p.direction) << ' ' << p.type << ' '
            << p.name;
        first = false;
      }
    }
    out << ";\n";
  }

  if (!c.subcomponents.empty()) {
    section();
    for (const auto& s : c.subcomponents) {
      out << "  component " << s.type;
      if (!s.args.empty()) {
        out << '(';
        for (std::size_t i = 0; i < s.args.size(); ++i) {
          out << (i ? ", " : "") << to_string(s.args[i]);
        }
        out << ')';
      }
      out << ' ' << s.name << ";\n";
    }
  }

  if (!connectors.empty()) {
    section();
    for (const auto& conn : connectors) {
      out << "  connect " << to_string(conn.source) << " -> " << to_string(conn.target) << ";\n";
    }
  }

  out << "}\n";
  return out.str();
}

}  // namespace deltaarc
