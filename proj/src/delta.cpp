#include "deltaarc/delta.hpp"

namespace deltaarc {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string_view rename_kind(ops::RenameKind k) {
  switch (k) {
    case ops::RenameKind::Port:
      return "port";
    case ops::RenameKind::Component:
      return "component";
    case ops::RenameKind::Parameter:
      break;
  }
  return "parameter";
}

}  // namespace

bool is_scope_free(const ModificationOp& op) {
  return std::holds_alternative<ops::ExpandAutoconnect>(op.kind) ||
         std::holds_alternative<ops::IntroduceAutoconnect>(op.kind) ||
         std::holds_alternative<ops::RemoveUnreachable>(op.kind);
}

std::string describe(const ModificationOp& op) {
  const auto conn = [](const PortRef& s, const PortRef& t) {
    return to_string(s) + " -> " + to_string(t);
  };
  return std::visit(
      Overloaded{
          [](const ops::AddPort& o) {
            return "add port " + std::string(to_string(o.port.direction)) + " " + o.port.type + " " +
                   o.port.name;
          },
          [](const ops::AddSubcomponent& o) {
            return "add component " + o.subcomponent.type + " " + o.subcomponent.name;
          },
          [](const ops::AddParameter& o) { return "add parameter " + o.name; },
          [](const ops::SetAutoconnect& o) {
            return "add autoconnect " + std::string(to_string(o.mode));
          },
          [](const ops::RemovePort& o) { return "remove port " + o.name; },
          [](const ops::RemoveSubcomponent& o) { return "remove component " + o.name; },
          [](const ops::RemoveParameter& o) { return "remove parameter " + o.name; },
          [&](const ops::Connect& o) { return "connect " + conn(o.source, o.target); },
          [&](const ops::Disconnect& o) { return "disconnect " + conn(o.source, o.target); },
          [](const ops::Rename& o) {
            return "rename " + std::string(rename_kind(o.kind)) + " " + o.from + " as " + o.to;
          },
          [](const ops::Replace& o) {
            return "replace component " + o.name + " with " + o.with_type +
                   (o.new_name ? " " + *o.new_name : std::string());
          },
          [](const ops::ModifyConfig& o) {
            std::string out = "modify component " + o.subcomponent + "(";
            for (std::size_t i = 0; i < o.assignments.size(); ++i) {
              if (i) out += ", ";
              out += o.assignments[i].parameter + "=" + to_string(o.assignments[i].value);
            }
            return out + ")";
          },
          [](const ops::ExpandAutoconnect&) { return std::string("expand autoconnect"); },
          [](const ops::IntroduceAutoconnect& o) {
            return "introduce autoconnect " + std::string(to_string(o.mode));
          },
          [](const ops::RemoveUnreachable&) { return std::string("remove unreachable"); },
      },
      op.kind);
}

}  // namespace deltaarc
