#include "coplab/trace_io.hpp"

#include <map>
#include <sstream>

#include "coplab/errors.hpp"
#include "coplab/graph_io.hpp"

namespace coplab {

using nlohmann::ordered_json;

namespace {

ordered_json event_to_json(const GameEvent& ev) {
  struct Visitor {
    ordered_json operator()(const event::CopPlacement& e) const {
      return {{"type", "cop_placement"}, {"move", 1}, {"positions", e.positions}};
    }
    ordered_json operator()(const event::RobberPlacement& e) const {
      return {{"type", "robber_placement"}, {"vertex", e.vertex}};
    }
    ordered_json operator()(const event::CopMove& e) const {
      ordered_json steps = ordered_json::array();
      for (const auto& s : e.steps) steps.push_back({{"cop", s.cop}, {"from", s.from}, {"to", s.to}});
      ordered_json j = {{"type", "cop_move"}, {"move", e.move}, {"steps", steps}};
      if (!e.snapshot.is_null()) j["state"] = e.snapshot;
      return j;
    }
    ordered_json operator()(const event::RobberMove& e) const {
      return {{"type", "robber_move"}, {"from", e.from}, {"to", e.to}};
    }
    ordered_json operator()(const event::Capture& e) const {
      return {{"type", "capture"}, {"vertex", e.vertex}, {"cop_moves", e.cop_moves}};
    }
  };
  return std::visit(Visitor{}, ev);
}

GameEvent event_from_json(const ordered_json& j) {
  auto type = j.at("type").get<std::string>();
  if (type == "cop_placement") return event::CopPlacement{j.at("positions").get<std::vector<Vertex>>()};
  if (type == "robber_placement") return event::RobberPlacement{j.at("vertex").get<Vertex>()};
  if (type == "cop_move") {
    event::CopMove e{j.at("move").get<int>(), {}, j.value("state", ordered_json())};
    for (const auto& s : j.at("steps")) {
      e.steps.push_back({s.at("cop").get<int>(), s.at("from").get<Vertex>(), s.at("to").get<Vertex>()});
    }
    return e;
  }
  if (type == "robber_move") return event::RobberMove{j.at("from").get<Vertex>(), j.at("to").get<Vertex>()};
  if (type == "capture") return event::Capture{j.at("vertex").get<Vertex>(), j.at("cop_moves").get<int>()};
  throw InputError("trace: unknown event type '" + type + "'");
}

OutcomeKind outcome_from_string(const std::string& s) {
  if (s == "CAPTURED") return OutcomeKind::kCaptured;
  if (s == "ROBBER_SURVIVED") return OutcomeKind::kRobberSurvived;
  if (s == "STRATEGY_FAILURE") return OutcomeKind::kStrategyFailure;
  throw InputError("trace: unknown outcome '" + s + "'");
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

}  // namespace

ordered_json failure_to_json(const StrategyFailure& failure) {
  ordered_json j = {{"reason", failure.reason}, {"detail", failure.detail}};
  j["certificate"] = failure.certificate ? ordered_json(failure.certificate->vertices) : ordered_json();
  return j;
}

std::string to_jsonl(const Graph& g, const GameTrace& trace) {
  std::ostringstream out;
  ordered_json header = {{"type", "header"}};
  header["graph"] = g.order() <= 62 ? ordered_json(encode_graph6(g)) : ordered_json();
  header["n"] = g.order();
  header["m"] = g.size();
  header["t"] = trace.t ? ordered_json(*trace.t) : ordered_json();
  header["cops"] = trace.cop_count;
  header["cop_strategy"] = trace.cop_strategy;
  header["robber_strategy"] = trace.robber_strategy;
  header["move_limit"] = trace.move_limit;
  out << header.dump() << '\n';
  for (const auto& ev : trace.events) out << event_to_json(ev).dump() << '\n';

  ordered_json outcome = {{"type", "outcome"},
                          {"result", to_string(trace.outcome.kind)},
                          {"cop_moves", trace.outcome.cop_moves}};
  if (trace.outcome.failure) outcome["failure"] = failure_to_json(*trace.outcome.failure);
  if (trace.outcome.offending_event) outcome["offending_event"] = event_to_json(*trace.outcome.offending_event);
  out << outcome.dump() << '\n';
  return out.str();
}

GameTrace trace_from_jsonl(std::string_view text) {
  GameTrace trace;
  bool have_header = false, have_outcome = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = ordered_json::parse(line);
      auto type = j.at("type").get<std::string>();
      if (type == "header") {
        have_header = true;
        if (!j.at("t").is_null()) trace.t = j.at("t").get<int>();
        trace.cop_count = j.at("cops").get<int>();
        trace.cop_strategy = j.at("cop_strategy").get<std::string>();
        trace.robber_strategy = j.at("robber_strategy").get<std::string>();
        trace.move_limit = j.at("move_limit").get<int>();
      } else if (type == "outcome") {
        have_outcome = true;
        trace.outcome.kind = outcome_from_string(j.at("result").get<std::string>());
        trace.outcome.cop_moves = j.at("cop_moves").get<int>();
        if (j.contains("failure")) {
          const auto& f = j.at("failure");
          StrategyFailure failure{f.at("reason").get<std::string>(), f.at("detail").get<std::string>(),
                                  std::nullopt};
          if (!f.at("certificate").is_null()) {
            failure.certificate = InducedPathCertificate{f.at("certificate").get<std::vector<Vertex>>()};
          }
          trace.outcome.failure = std::move(failure);
        }
        if (j.contains("offending_event")) trace.outcome.offending_event = event_from_json(j.at("offending_event"));
      } else {
        trace.events.push_back(event_from_json(j));
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("trace: ") + e.what(), line_no);
    }
  }
  if (!have_header || !have_outcome) throw InputError("trace: missing header or outcome line");
  return trace;
}

std::string to_dot(const Graph& g, const GameTrace& trace) {
  std::map<Vertex, std::vector<int>> cop_visits, robber_visits;
  std::optional<Vertex> capture_at;
  int round = 0;
  for (const auto& ev : trace.events) {
    if (const auto* e = std::get_if<event::CopPlacement>(&ev)) {
      round = 1;
      for (Vertex v : e->positions) cop_visits[v].push_back(1);
    } else if (const auto* e = std::get_if<event::CopMove>(&ev)) {
      round = e->move;
      for (const auto& s : e->steps) cop_visits[s.to].push_back(e->move);
    } else if (const auto* e = std::get_if<event::RobberPlacement>(&ev)) {
      robber_visits[e->vertex].push_back(round);
    } else if (const auto* e = std::get_if<event::RobberMove>(&ev)) {
      robber_visits[e->to].push_back(round);
    } else if (const auto* e = std::get_if<event::Capture>(&ev)) {
      capture_at = e->vertex;
    }
  }
  for (auto& [v, moves] : cop_visits) moves.erase(std::unique(moves.begin(), moves.end()), moves.end());

  std::ostringstream out;
  out << "graph trace {\n";
  out << "  label=\"" << trace.cop_strategy << " vs " << trace.robber_strategy << ": "
      << to_string(trace.outcome.kind) << " after " << trace.outcome.cop_moves << " cop moves\";\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << v;
    if (cop_visits.count(v)) out << "\\ncops@" << join(cop_visits[v]);
    if (robber_visits.count(v)) out << "\\nrobber@" << join(robber_visits[v]);
    out << "\"";
    if (capture_at == v) out << ", color=red, penwidth=2";
    out << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

ReplayReport replay_jsonl(const Graph& g, std::string_view text) {
  ReplayReport report;
  try {
    auto trace = trace_from_jsonl(text);
    if (auto problem = validate_trace(g, trace)) {
      report.error = *problem;
      return report;
    }
    if (trace.outcome.failure && trace.outcome.failure->certificate &&
        !verify_induced_path(g, trace.outcome.failure->certificate->vertices)) {
      report.error = "failure certificate is not an induced path";
      return report;
    }
    report.ok = true;
    if (trace.outcome.kind == OutcomeKind::kCaptured) report.capture_cop_moves = trace.outcome.cop_moves;
  } catch (const InputError& e) {
    report.error = e.what();
  }
  return report;
}

}  // namespace coplab
