#include "lensfiber/report_json.hpp"

namespace lensfiber {

namespace {

const Int kJsonSafeMax = (Int(1) << 53) - 1;

nlohmann::json int_vector_to_json(const std::vector<Int>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& x : v) arr.push_back(int_to_json(x));
  return arr;
}

}  // namespace

nlohmann::json int_to_json(const Int& v) {
  if (v >= -kJsonSafeMax && v <= kJsonSafeMax) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

nlohmann::json report_to_json(const FiberReport& rep) {
  nlohmann::json j;
  j["p"] = int_to_json(rep.params.p);
  j["q"] = int_to_json(rep.params.q);
  j["k"] = int_to_json(rep.params.k);
  j["q_inv"] = int_to_json(rep.params.q_inv);
  j["l"] = int_to_json(rep.params.l);
  j["theta"] = int_to_json(rep.params.theta);
  j["t"] = int_to_json(rep.params.t);
  j["t_prime"] = int_to_json(rep.params.t_prime);
  j["remainders"] = int_vector_to_json(rep.trace.remainders());
  j["coefficients"] = int_vector_to_json(rep.trace.coefficients());
  j["harmonics"] = int_vector_to_json(rep.harmonics);
  j["fibers"] = rep.fibers;
  j["minima_count"] = int_to_json(rep.minima_count);
  if (rep.minima) j["minima"] = int_vector_to_json(*rep.minima);
  if (rep.alexander) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& c : rep.alexander->coefficients()) arr.push_back(int_to_json(c));
    j["alexander"] = arr;
  } else {
    j["alexander"] = nullptr;
  }
  j["breadth"] = int_to_json(rep.breadth);
  j["euler_char"] = int_to_json(rep.euler_char);
  return j;
}

}  // namespace lensfiber
