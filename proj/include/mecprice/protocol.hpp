// Copyright 2026 The mecprice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MECPRICE_PROTOCOL_HPP
#define MECPRICE_PROTOCOL_HPP

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mecprice/uniform_pricing.hpp"

// Synchronous-round replay of uniform-price bargaining. The cloud agent only
// knows the offload thresholds, the cycles per bit and its capacity; each user
// agent only knows its own profile. They talk exclusively through Messages.

namespace mecprice::protocol {

enum class MessageKind { PriceBroadcast, OffloadReport, Terminate };

inline const char* to_string(MessageKind k) {
  switch (k) {
    case MessageKind::PriceBroadcast:
      return "PriceBroadcast";
    case MessageKind::OffloadReport:
      return "OffloadReport";
    case MessageKind::Terminate:
      return "Terminate";
  }
  return "?";
}

inline constexpr const char* kCloudSender = "cloud";

inline std::string user_sender(std::size_t k) { return "user/" + std::to_string(k); }

// Payload is an ordered list of named numbers so a trace can carry (and an
// audit can catch) anything an agent chose to send.
struct Message {
  MessageKind kind = MessageKind::PriceBroadcast;
  std::size_t round = 0;
  std::string sender;
  std::vector<std::pair<std::string, double>> payload;

  std::optional<double> field(const std::string& key) const {
    for (const auto& [k, v] : payload) {
      if (k == key) return v;
    }
    return std::nullopt;
  }

  bool operator==(const Message&) const = default;
};

struct Round {
  Message broadcast;
  std::vector<Message> reports;
  double load_cycles = 0.0;
  bool feasible = true;
  double revenue_s = 0.0;  // zero when infeasible

  bool operator==(const Round&) const = default;
};

struct BargainTrace {
  std::vector<Round> rounds;
  std::optional<Message> terminate;
  PriceOutcome final;

  // Every message in send order.
  std::vector<Message> messages() const {
    std::vector<Message> out;
    for (const auto& r : rounds) {
      out.push_back(r.broadcast);
      out.insert(out.end(), r.reports.begin(), r.reports.end());
    }
    if (terminate) out.push_back(*terminate);
    return out;
  }

  bool operator==(const BargainTrace&) const = default;
};

class UserAgent {
 public:
  UserAgent(std::size_t index, UserProfile profile, UserKinetics kinetics)
      : index_(index), profile_(profile), kinetics_(kinetics) {}

  Message on_broadcast(const Message& m) {
    decision_ = best_response(kinetics_, profile_, *m.field("price"), index_);
    return Message{MessageKind::OffloadReport,
                   m.round,
                   user_sender(index_),
                   {{"user", static_cast<double>(index_)}, {"bits", decision_.offloaded_bits}}};
  }

  const OffloadDecision& decision() const { return decision_; }

 private:
  std::size_t index_;
  UserProfile profile_;
  UserKinetics kinetics_;
  OffloadDecision decision_;
};

class CloudAgent {
 public:
  // Before bargaining the cloud collects each user's threshold and cycles per
  // bit; nothing else about the users is visible to it.
  CloudAgent(std::vector<double> thresholds, std::vector<double> cycles_per_bit, double capacity_cycles)
      : cycles_per_bit_(std::move(cycles_per_bit)), capacity_(capacity_cycles) {
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    pending_.assign(thresholds.rbegin(), thresholds.rend());
  }

  bool has_next() const { return !done_ && next_ < pending_.size(); }

  Message broadcast() { return Message{MessageKind::PriceBroadcast, round_, kCloudSender, {{"price", pending_[next_]}}}; }

  // Scores the round and decides whether to keep lowering the price.
  Round collect(Message broadcast, std::vector<Message> reports) {
    Round r;
    const double price = *broadcast.field("price");
    for (const auto& rep : reports) {
      const auto user = static_cast<std::size_t>(*rep.field("user"));
      const double bits = *rep.field("bits");
      r.load_cycles += bits * cycles_per_bit_[user];
      r.revenue_s += payment(price, bits, cycles_per_bit_[user]);
    }
    r.feasible = r.load_cycles <= capacity_;
    if (r.feasible) {
      if (!best_price_ || r.revenue_s > best_revenue_) {
        best_price_ = price;
        best_revenue_ = r.revenue_s;
      }
      ++next_;
    } else {
      r.revenue_s = 0.0;
      done_ = true;
    }
    r.broadcast = std::move(broadcast);
    r.reports = std::move(reports);
    ++round_;
    return r;
  }

  Message terminate() const {
    return Message{MessageKind::Terminate, round_, kCloudSender, {{"price", best_price_.value_or(kNoOffloadPrice)}}};
  }

 private:
  std::vector<double> pending_;  // descending
  std::vector<double> cycles_per_bit_;
  double capacity_;
  std::size_t next_ = 0;
  std::size_t round_ = 0;
  bool done_ = false;
  std::optional<double> best_price_;
  double best_revenue_ = 0.0;
};

inline BargainTrace run_bargaining(const Scenario& s, const std::vector<UserKinetics>& kin) {
  detail::check_kinetics(s, kin);
  std::vector<double> thresholds, cpb;
  std::vector<UserAgent> users;
  for (std::size_t k = 0; k < s.users.size(); ++k) {
    thresholds.push_back(offload_threshold(s.users[k]));
    cpb.push_back(s.users[k].cycles_per_bit);
    users.emplace_back(k, s.users[k], kin[k]);
  }
  CloudAgent cloud(std::move(thresholds), std::move(cpb), s.system.cloud_capacity_cycles);

  BargainTrace trace;
  while (cloud.has_next()) {
    Message b = cloud.broadcast();
    std::vector<Message> reports;
    reports.reserve(users.size());
    for (auto& u : users) reports.push_back(u.on_broadcast(b));
    trace.rounds.push_back(cloud.collect(std::move(b), std::move(reports)));
  }
  // The final price is announced once more and every user settles on it.
  trace.terminate = cloud.terminate();
  const double final_price = *trace.terminate->field("price");
  trace.final.prices.assign(users.size(), final_price);
  for (auto& u : users) {
    u.on_broadcast(*trace.terminate);
    const OffloadDecision& d = u.decision();
    trace.final.total_load_cycles += d.offloaded_bits * s.users[d.user_index].cycles_per_bit;
    trace.final.revenue_s += d.payment_s;
    trace.final.decisions.push_back(d);
  }
  if (trace.final.total_load_cycles > s.system.cloud_capacity_cycles) {
    trace.final.feasible = false;
    trace.final.revenue_s = 0.0;
  }
  return trace;
}

inline BargainTrace run_bargaining(const Scenario& s) { return run_bargaining(s, compute_all_kinetics(s)); }

struct AuditReport {
  std::vector<std::string> violations;
  bool clean() const { return violations.empty(); }
};

// Checks that the trace only ever moved prices downstream and (index, bits)
// upstream, from the right senders, within the right rounds.
inline AuditReport information_audit(const BargainTrace& trace) {
  AuditReport rep;
  auto flag = [&rep](const Message& m, const std::string& what) {
    rep.violations.push_back("round " + std::to_string(m.round) + " " + to_string(m.kind) + " from " + m.sender +
                             ": " + what);
  };
  auto check_price_only = [&](const Message& m) {
    if (m.sender != kCloudSender) flag(m, "cloud message from a non-cloud sender");
    for (const auto& [key, v] : m.payload) {
      if (key != "price") flag(m, "carries field '" + key + "'");
    }
    if (!m.field("price")) flag(m, "missing price");
  };
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    const Round& r = trace.rounds[i];
    if (r.broadcast.kind != MessageKind::PriceBroadcast) flag(r.broadcast, "expected a price broadcast");
    check_price_only(r.broadcast);
    for (const auto& m : r.reports) {
      if (m.kind != MessageKind::OffloadReport) flag(m, "expected an offload report");
      if (m.round != r.broadcast.round) flag(m, "answers a different round's broadcast");
      for (const auto& [key, v] : m.payload) {
        if (key != "user" && key != "bits") flag(m, "carries field '" + key + "'");
      }
      const auto user = m.field("user");
      if (!user || !m.field("bits")) {
        flag(m, "missing user or bits");
      } else if (m.sender != user_sender(static_cast<std::size_t>(*user))) {
        flag(m, "sender does not match reported user");
      }
    }
  }
  if (trace.terminate) {
    if (trace.terminate->kind != MessageKind::Terminate) flag(*trace.terminate, "expected terminate");
    check_price_only(*trace.terminate);
  }
  return rep;
}

namespace detail {

inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

// One message per line: round, kind, sender, then payload as key=value.
inline void write_trace_log(const BargainTrace& trace, std::ostream& os) {
  for (const Message& m : trace.messages()) {
    os << "round=" << m.round << " kind=" << to_string(m.kind) << " sender=" << m.sender;
    for (const auto& [key, v] : m.payload) os << ' ' << key << '=' << detail::format_number(v);
    os << '\n';
  }
}

inline std::string trace_log(const BargainTrace& trace) {
  std::ostringstream os;
  write_trace_log(trace, os);
  return os.str();
}

}  // namespace mecprice::protocol

#endif  // MECPRICE_PROTOCOL_HPP
