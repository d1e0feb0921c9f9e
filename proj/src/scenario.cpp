#include "njc/scenario.hpp"

#include <algorithm>
#include <array>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "njc/error.hpp"
#include "njc/spectrum.hpp"

namespace njc {

namespace {

constexpr std::array<std::pair<Observable, std::string_view>, 8> kObservableNames{{
    {Observable::spectrum, "spectrum"},
    {Observable::rabi, "rabi"},
    {Observable::inversion, "inversion"},
    {Observable::photon_distribution, "photon_distribution"},
    {Observable::mandel_q, "mandel_q"},
    {Observable::squeezing, "squeezing"},
    {Observable::overlap, "overlap"},
    {Observable::overlap_envelope, "overlap_envelope"},
}};

const std::set<std::string, std::less<>> kKnownKeys{
    "name",       "description", "omega",       "r",          "delta",     "g",
    "k",          "nbar",        "atom",        "atom_ce",    "atom_cg",   "field",
    "field_phase", "fock_n",     "n_max",       "t_start",    "t_end",     "samples",
    "outputs",    "spectrum_n",  "delta_min",   "delta_max",  "delta_points", "rabi_n_max",
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string unquote(std::string s) {
  if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') || (s.front() == '\'' && s.back() == '\''))) {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

struct Entry {
  std::string value;
  int line = 0;
};

class Document {
 public:
  explicit Document(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      const std::string line = trim(raw);
      if (line.empty() || line.front() == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError(line_no, "", "expected 'key = value'");
      std::string key = trim(std::string_view(line).substr(0, eq));
      std::string value = trim(std::string_view(line).substr(eq + 1));
      if (key.empty()) throw ParseError(line_no, "", "missing key before '='");
      if (!kKnownKeys.contains(key)) throw ParseError(line_no, key, "unknown key");
      if (entries_.contains(key)) throw ParseError(line_no, key, "duplicate key");
      entries_.emplace(std::move(key), Entry{std::move(value), line_no});
    }
  }

  bool has(const std::string& key) const { return entries_.contains(key); }
  const Entry* find(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::optional<std::string> text(const std::string& key) const {
    const Entry* e = find(key);
    if (!e) return std::nullopt;
    return unquote(e->value);
  }

  std::optional<double> number(const std::string& key) const {
    const Entry* e = find(key);
    if (!e) return std::nullopt;
    return to_number(e->value, e->line, key);
  }

  std::optional<int> integer(const std::string& key) const {
    const Entry* e = find(key);
    if (!e) return std::nullopt;
    return to_integer(e->value, e->line, key);
  }

  std::optional<std::vector<std::string>> list(const std::string& key) const {
    const Entry* e = find(key);
    if (!e) return std::nullopt;
    std::string body = e->value;
    if (!body.empty() && body.front() == '[') {
      if (body.back() != ']') throw ParseError(e->line, key, "unterminated list");
      body = body.substr(1, body.size() - 2);
    }
    std::vector<std::string> items;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = unquote(trim(item));
      if (item.empty()) throw ParseError(e->line, key, "empty list item");
      items.push_back(item);
    }
    return items;
  }

  int line_of(const std::string& key) const {
    const Entry* e = find(key);
    return e ? e->line : 0;
  }

  static double to_number(const std::string& s, int line, const std::string& key) {
    const std::string v = unquote(s);
    char* end = nullptr;
    errno = 0;
    const double x = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || errno == ERANGE || !std::isfinite(x)) {
      throw ParseError(line, key, "not a finite number: '" + v + "'");
    }
    return x;
  }

  static int to_integer(const std::string& s, int line, const std::string& key) {
    const std::string v = unquote(s);
    char* end = nullptr;
    errno = 0;
    const long x = std::strtol(v.c_str(), &end, 10);
    if (v.empty() || end != v.c_str() + v.size() || errno == ERANGE || x < -2147483647L ||
        x > 2147483647L) {
      throw ParseError(line, key, "not an integer: '" + v + "'");
    }
    return static_cast<int>(x);
  }

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

cplx parse_complex(const Document& doc, const std::string& key) {
  const auto items = doc.list(key);
  const int line = doc.line_of(key);
  if (items->size() != 2) throw ParseError(line, key, "expected 're, im'");
  return {Document::to_number((*items)[0], line, key), Document::to_number((*items)[1], line, key)};
}

void validate(const Scenario& s) {
  if (s.name.empty()) throw ValidationError("scenario name is required");
  if (s.name.find_first_of("/\\ \t") != std::string::npos) {
    throw ValidationError("scenario name must not contain spaces or path separators");
  }
  if (s.time.samples < 1) throw ValidationError("samples must be >= 1");
  if (!(s.time.t_start >= 0.0) || !(s.time.t_end >= s.time.t_start)) {
    throw ValidationError("time grid needs t_end >= t_start >= 0");
  }
  if (s.outputs.empty()) throw ValidationError("at least one output is required");
  if (!(s.nbar >= 0.0)) throw ValidationError("nbar must be >= 0");
  if (s.fock_n < 0) throw ValidationError("fock_n must be >= 0");
  if (s.n_max && *s.n_max < 1) throw ValidationError("n_max must be >= 1");
  if (s.spectrum_n.empty()) throw ValidationError("spectrum_n must not be empty");
  for (int n : s.spectrum_n) {
    if (n < 0) throw ValidationError("spectrum_n entries must be >= 0");
  }
  if (s.delta_points < 1) throw ValidationError("delta_points must be >= 1");
  if (!(s.delta_max >= s.delta_min)) throw ValidationError("delta_max must be >= delta_min");
  if (s.rabi_n_max < 0) throw ValidationError("rabi_n_max must be >= 0");
  const double atom_norm = std::norm(s.atom_e) + std::norm(s.atom_g);
  if (std::abs(atom_norm - 1.0) > 1e-12) {
    throw ValidationError("atomic amplitudes must satisfy |ce|^2 + |cg|^2 = 1");
  }
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string_view to_string(Observable o) {
  for (const auto& [value, name] : kObservableNames) {
    if (value == o) return name;
  }
  return "unknown";
}

std::optional<Observable> parse_observable(std::string_view name) {
  for (const auto& [value, n] : kObservableNames) {
    if (n == name) return value;
  }
  return std::nullopt;
}

std::vector<double> TimeGrid::points() const {
  std::vector<double> out(static_cast<std::size_t>(samples));
  if (samples == 1) {
    out[0] = t_start;
    return out;
  }
  const double step = (t_end - t_start) / (samples - 1);
  for (int i = 0; i < samples; ++i) out[i] = t_start + step * i;
  out.back() = t_end;
  return out;
}

FockCutoff Scenario::cutoff() const {
  if (n_max) return FockCutoff(*n_max);
  if (field == FieldKind::fock) return FockCutoff(std::max(64, fock_n + 1));
  return FockCutoff::for_coherent(nbar);
}

FieldState Scenario::initial_field() const {
  if (field == FieldKind::fock) return fock_state(fock_n, cutoff());
  return coherent_state(std::polar(std::sqrt(nbar), field_phase), cutoff());
}

InitialCondition Scenario::initial_condition() const {
  return InitialCondition::superposition(atom_e, atom_g, initial_field());
}

Scenario parse_scenario(std::string_view text) {
  const Document doc(text);
  Scenario s;

  s.name = doc.text("name").value_or("");
  s.description = doc.text("description").value_or("");
  if (s.name.empty()) throw ValidationError("scenario name is required");

  if (doc.has("r") && doc.has("delta")) {
    throw ValidationError("give either r or delta, not both");
  }
  for (const char* key : {"g", "k"}) {
    if (!doc.has(key)) throw ValidationError(std::string("missing required key '") + key + "'");
  }

  if (const auto field = doc.text("field")) {
    if (*field == "coherent") s.field = FieldKind::coherent;
    else if (*field == "fock") s.field = FieldKind::fock;
    else throw ParseError(doc.line_of("field"), "field", "expected coherent or fock");
  }
  if (s.field == FieldKind::coherent && !doc.has("nbar")) {
    throw ValidationError("missing required key 'nbar' for a coherent field");
  }
  s.nbar = doc.number("nbar").value_or(0.0);
  s.field_phase = doc.number("field_phase").value_or(0.0);
  s.fock_n = doc.integer("fock_n").value_or(0);

  const double omega = doc.number("omega").value_or(1.0);
  const double g = *doc.number("g");
  const double k = *doc.number("k");
  double r = 1.0;
  if (doc.has("r")) {
    r = *doc.number("r");
  } else if (const Entry* e = doc.find("delta")) {
    double delta = 0.0;
    if (unquote(e->value) == "critical") {
      if (k == 0.0) throw ValidationError("delta = critical needs k > 0");
      delta = critical_detuning(ModelParams(omega, 1.0, g, k), s.nbar);
    } else {
      delta = Document::to_number(e->value, e->line, "delta");
    }
    if (!(omega > 0.0)) throw ValidationError("omega must be > 0");
    r = 1.0 + delta / omega;
  }
  s.params = ModelParams(omega, r, g, k);

  if (const auto atom = doc.text("atom")) {
    if (*atom == "excited") s.atom = AtomInit::excited;
    else if (*atom == "ground") s.atom = AtomInit::ground;
    else if (*atom == "superposition") s.atom = AtomInit::superposition;
    else throw ParseError(doc.line_of("atom"), "atom", "expected excited, ground or superposition");
  }
  const bool has_amplitudes = doc.has("atom_ce") || doc.has("atom_cg");
  if (s.atom == AtomInit::superposition) {
    if (!doc.has("atom_ce") || !doc.has("atom_cg")) {
      throw ValidationError("superposition atom needs atom_ce and atom_cg");
    }
    s.atom_e = parse_complex(doc, "atom_ce");
    s.atom_g = parse_complex(doc, "atom_cg");
  } else if (has_amplitudes) {
    throw ValidationError("atom_ce/atom_cg are only allowed with atom = superposition");
  } else if (s.atom == AtomInit::ground) {
    s.atom_e = 0.0;
    s.atom_g = 1.0;
  }

  s.n_max = doc.integer("n_max");
  s.time.t_start = doc.number("t_start").value_or(0.0);
  s.time.t_end = doc.number("t_end").value_or(s.time.t_start);
  s.time.samples = doc.integer("samples").value_or(1);

  if (const auto outputs = doc.list("outputs")) {
    for (const std::string& item : *outputs) {
      const auto o = parse_observable(item);
      if (!o) throw ParseError(doc.line_of("outputs"), "outputs", "unknown observable '" + item + "'");
      if (std::find(s.outputs.begin(), s.outputs.end(), *o) != s.outputs.end()) {
        throw ParseError(doc.line_of("outputs"), "outputs", "observable listed twice: " + item);
      }
      s.outputs.push_back(*o);
    }
  } else {
    s.outputs = {Observable::inversion};
  }

  if (const auto ns = doc.list("spectrum_n")) {
    s.spectrum_n.clear();
    for (const std::string& item : *ns) {
      s.spectrum_n.push_back(Document::to_integer(item, doc.line_of("spectrum_n"), "spectrum_n"));
    }
  }
  s.delta_min = doc.number("delta_min").value_or(s.delta_min);
  s.delta_max = doc.number("delta_max").value_or(s.delta_max);
  s.delta_points = doc.integer("delta_points").value_or(s.delta_points);
  s.rabi_n_max = doc.integer("rabi_n_max").value_or(s.rabi_n_max);

  validate(s);
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "name = " << s.name << '\n';
  if (!s.description.empty()) out << "description = " << s.description << '\n';
  out << "omega = " << fmt(s.params.omega()) << '\n';
  out << "r = " << fmt(s.params.r()) << '\n';
  out << "g = " << fmt(s.params.g()) << '\n';
  out << "k = " << fmt(s.params.k()) << '\n';
  switch (s.atom) {
    case AtomInit::excited: out << "atom = excited\n"; break;
    case AtomInit::ground: out << "atom = ground\n"; break;
    case AtomInit::superposition:
      out << "atom = superposition\n";
      out << "atom_ce = " << fmt(s.atom_e.real()) << ", " << fmt(s.atom_e.imag()) << '\n';
      out << "atom_cg = " << fmt(s.atom_g.real()) << ", " << fmt(s.atom_g.imag()) << '\n';
      break;
  }
  out << "field = " << (s.field == FieldKind::coherent ? "coherent" : "fock") << '\n';
  out << "nbar = " << fmt(s.nbar) << '\n';
  out << "field_phase = " << fmt(s.field_phase) << '\n';
  out << "fock_n = " << s.fock_n << '\n';
  if (s.n_max) out << "n_max = " << *s.n_max << '\n';
  out << "t_start = " << fmt(s.time.t_start) << '\n';
  out << "t_end = " << fmt(s.time.t_end) << '\n';
  out << "samples = " << s.time.samples << '\n';
  out << "outputs = ";
  for (std::size_t i = 0; i < s.outputs.size(); ++i) {
    out << (i ? ", " : "") << to_string(s.outputs[i]);
  }
  out << '\n';
  out << "spectrum_n = ";
  for (std::size_t i = 0; i < s.spectrum_n.size(); ++i) out << (i ? ", " : "") << s.spectrum_n[i];
  out << '\n';
  out << "delta_min = " << fmt(s.delta_min) << '\n';
  out << "delta_max = " << fmt(s.delta_max) << '\n';
  out << "delta_points = " << s.delta_points << '\n';
  out << "rabi_n_max = " << s.rabi_n_max << '\n';
  return out.str();
}

namespace {

struct PresetText {
  std::string_view name;
  std::string_view text;
};

constexpr PresetText kPresets[] = {
    {"fig1", R"(name = fig1
description = Dressed energies E+/E- and bare energies vs detuning for n = 1, 2 (g = 0.1, k = 0.1)
g = 0.1
k = 0.1
nbar = 30
outputs = spectrum
spectrum_n = 1, 2
delta_min = -0.5
delta_max = 1.0
delta_points = 301
)"},
    {"fig2", R"(name = fig2
description = Exact and quadratic Rabi frequency vs n with the Poisson weights (delta = 0.016061)
g = 0.001
k = 0.0001
nbar = 30
delta = 0.016061
outputs = rabi
rabi_n_max = 200
)"},
    {"fig3a", R"(name = fig3a
description = Time-dependent inversion W_T below the critical detuning (delta = 0.01)
g = 0.001
k = 0.0001
nbar = 30
delta = 0.01
t_end = 300000
samples = 30001
outputs = inversion
)"},
    {"fig3b", R"(name = fig3b
description = Time-dependent inversion W_T at the critical detuning (delta = 0.016061)
g = 0.001
k = 0.0001
nbar = 30
delta = 0.016061
t_end = 300000
samples = 30001
outputs = inversion
)"},
    {"fig3c", R"(name = fig3c
description = Time-dependent inversion W_T above the critical detuning (delta = 0.022)
g = 0.001
k = 0.0001
nbar = 30
delta = 0.022
t_end = 300000
samples = 30001
outputs = inversion
)"},
    {"fig4", R"(name = fig4
description = Quadrature variances (dX)^2 and (dY)^2, coherent alpha = sqrt(30), delta = 0.01
g = 0.001
k = 0.0001
nbar = 30
delta = 0.01
t_end = 180000
samples = 18001
outputs = squeezing
)"},
    {"fig5", R"(name = fig5
description = Mandel Q of the field, coherent alpha = sqrt(30), delta = 0.01
g = 0.001
k = 0.0001
nbar = 30
delta = 0.01
t_end = 180000
samples = 18001
outputs = mandel_q
)"},
    {"fig6", R"(name = fig6
description = Overlap of initial and evolved states and its analytic decay envelope (delta = 0.016061)
g = 0.001
k = 0.0001
nbar = 30
delta = 0.016061
t_end = 200000
samples = 20001
outputs = overlap, overlap_envelope
)"},
    {"jc_revival", R"(name = jc_revival
description = Jaynes-Cummings limit (k = 0, resonant): collapse and first revival of the inversion
g = 0.001
k = 0
nbar = 30
delta = 0
t_end = 80000
samples = 16001
outputs = inversion
)"},
    {"su11", R"(name = su11
description = SU(1,1) limit (k = 1, resonant): inversion stays pinned, W_T of order g^2
g = 0.001
k = 1
nbar = 30
delta = 0
t_end = 20
samples = 2001
outputs = inversion
)"},
};

}  // namespace

std::vector<PresetInfo> list_presets() {
  std::vector<PresetInfo> out;
  for (const PresetText& p : kPresets) {
    out.push_back({std::string(p.name), parse_scenario(p.text).description});
  }
  return out;
}

std::optional<Scenario> preset(std::string_view name) {
  for (const PresetText& p : kPresets) {
    if (p.name == name) return parse_scenario(p.text);
  }
  return std::nullopt;
}

Scenario apply_overrides(Scenario s, const Overrides& o) {
  const double delta = o.delta.value_or(s.params.detuning());
  const double g = o.g.value_or(s.params.g());
  const double k = o.k.value_or(s.params.k());
  s.params = ModelParams::from_detuning(delta, g, k, s.params.omega());
  if (o.nbar) s.nbar = *o.nbar;
  if (o.n_max) s.n_max = *o.n_max;
  if (o.samples) s.time.samples = *o.samples;
  validate(s);
  return s;
}

}  // namespace njc
