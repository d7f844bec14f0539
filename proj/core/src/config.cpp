// Copyright 2026 The stereobench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stereobench/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <limits>
#include <type_traits>

#include "stereobench/codecs.hpp"
#include "stereobench/error.hpp"

namespace stereobench {

namespace {

using Keys = std::initializer_list<std::string_view>;

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  raise(ErrorCode::kConfig, path + ": " + msg);
}

// Runs a module validator and rewrites its "stage.field" prefix into the
// full config path.
void guard(const std::string& path, std::string_view stage, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    std::string d(e.detail());
    const std::string lead = std::string(stage) + ".";
    if (!stage.empty() && d.starts_with(lead)) raise(ErrorCode::kConfig, path + "." + d.substr(lead.size()));
    raise(ErrorCode::kConfig, path + ": " + d);
  }
}

template <class E>
std::string choices(std::string_view (*name)(E), std::initializer_list<E> all) {
  std::string s;
  for (E e : all) s += (s.empty() ? "" : "|") + std::string(name(e));
  return s;
}

class Reader {
 public:
  Reader(YAML::Node node, std::string path) : node_(std::move(node)), path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  bool is_null() const { return !node_ || node_.IsNull(); }

  void expect_map(Keys allowed) const {
    if (!node_.IsMap()) fail(path_.empty() ? "<root>" : path_, "expected a mapping");
    for (const auto& kv : node_) {
      const std::string key = kv.first.Scalar();
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
        raise(ErrorCode::kConfig, "unknown key '" + join(path_, key) + "'");
    }
  }

  bool has(std::string_view key) const {
    const YAML::Node& n = node_;
    return n.IsMap() && static_cast<bool>(n[std::string(key)]);
  }

  Reader child(std::string_view key) const {
    const YAML::Node& n = node_;
    return Reader(n[std::string(key)], join(path_, key));
  }

  template <class T>
  T as() const {
    if constexpr (std::is_same_v<T, bool>) {
      return scalar<bool>("a boolean");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!node_.IsScalar()) fail(path_, "expected a string");
      return node_.Scalar();
    } else if constexpr (std::is_same_v<T, std::filesystem::path>) {
      return std::filesystem::path(as<std::string>());
    } else if constexpr (std::is_floating_point_v<T>) {
      const T v = scalar<T>("a number");
      if (!std::isfinite(v)) fail(path_, "expected a finite number");
      return v;
    } else if constexpr (std::is_unsigned_v<T>) {
      if (node_.IsScalar() && node_.Scalar().starts_with("-"))
        fail(path_, "expected a non-negative integer");
      return scalar<T>("a non-negative integer");
    } else {
      static_assert(std::is_integral_v<T>);
      return scalar<T>("an integer");
    }
  }

  template <class T>
  std::vector<T> as_list() const {
    if (!node_.IsSequence()) fail(path_, "expected a list");
    std::vector<T> out;
    for (std::size_t i = 0; i < node_.size(); ++i)
      out.push_back(Reader(node_[i], path_ + "[" + std::to_string(i) + "]").as<T>());
    return out;
  }

  template <class T>
  void read(std::string_view key, T& out) const {
    if (has(key)) out = child(key).as<T>();
  }

  template <class T>
  void read_list(std::string_view key, std::vector<T>& out) const {
    if (has(key)) out = child(key).as_list<T>();
  }

  template <class E>
  void read_enum(std::string_view key, E& out, std::optional<E> (*parse)(std::string_view),
                 const std::string& expected) const {
    if (!has(key)) return;
    const Reader c = child(key);
    const std::string s = c.as<std::string>();
    const auto v = parse(s);
    if (!v) fail(c.path(), "unknown value '" + s + "' (expected " + expected + ")");
    out = *v;
  }

  std::vector<Reader> items() const {
    std::vector<Reader> out;
    if (is_null()) return out;
    if (!node_.IsSequence()) fail(path_, "expected a list");
    for (std::size_t i = 0; i < node_.size(); ++i)
      out.emplace_back(node_[i], path_ + "[" + std::to_string(i) + "]");
    return out;
  }

 private:
  template <class T>
  T scalar(const char* what) const {
    if (!node_.IsScalar()) fail(path_, std::string("expected ") + what);
    try {
      return node_.as<T>();
    } catch (const YAML::Exception&) {
      fail(path_, std::string("expected ") + what + ", got '" + node_.Scalar() + "'");
    }
  }

  YAML::Node node_;
  std::string path_;
};

YAML::Node load_yaml(std::string_view text) {
  try {
    YAML::Node n = YAML::Load(std::string(text));
    if (!n || n.IsNull()) raise(ErrorCode::kConfig, "empty configuration");
    return n;
  } catch (const YAML::Exception& e) {
    raise(ErrorCode::kConfig, std::string("YAML syntax: ") + e.what());
  }
}

std::string read_text(const std::filesystem::path& file) {
  const std::vector<std::uint8_t> bytes = read_file(file);
  return std::string(bytes.begin(), bytes.end());
}

// --- enum names local to the config schema ---------------------------------

std::string_view feature_kind_name(FeatureKind k) {
  return k == FeatureKind::kCensus ? "census" : "intensity_gradient";
}
std::optional<FeatureKind> parse_feature_kind(std::string_view s) {
  if (s == "census") return FeatureKind::kCensus;
  if (s == "intensity_gradient") return FeatureKind::kIntensityGradient;
  return std::nullopt;
}
std::string_view out_of_range_name(OutOfRange o) {
  return o == OutOfRange::kZeroFill ? "zero_fill" : "max_cost";
}
std::optional<OutOfRange> parse_out_of_range(std::string_view s) {
  if (s == "zero_fill") return OutOfRange::kZeroFill;
  if (s == "max_cost") return OutOfRange::kMaxCost;
  return std::nullopt;
}

// --- readers ------------------------------------------------------------------

Dataset read_dataset(const Reader& r) {
  if (!r.has("dataset")) fail(join(r.path(), "dataset"), "required");
  Dataset d{};
  r.read_enum(
      "dataset", d, parse_dataset,
      choices(dataset_name, {Dataset::kSceneFlow, Dataset::kKitti2012, Dataset::kKitti2015,
                             Dataset::kMiddlebury, Dataset::kEth3d}));
  return d;
}

std::string normalize_variant(Dataset d, std::string v, const std::string& path) {
  if (d == Dataset::kMiddlebury) {
    if (v.empty()) return "half";
    if (!parse_resolution(v)) fail(path, "unknown Middlebury resolution '" + v + "' (expected full|half|quarter)");
  } else if (d == Dataset::kSceneFlow) {
    if (v.empty()) fail(path, "SceneFlow requires a render pass (clean|final)");
    if (!parse_pass(v)) fail(path, "unknown SceneFlow pass '" + v + "' (expected clean|final)");
  } else if (!v.empty()) {
    fail(path, "dataset " + std::string(dataset_name(d)) + " has no variants");
  }
  return v;
}

void read_feature(const Reader& r, FeatureConfig& f) {
  r.expect_map({"kind", "window", "channels", "scale", "normalize_input", "mean_rgb", "std_rgb",
                "mean_gray", "std_gray"});
  r.read_enum("kind", f.kind, parse_feature_kind, "census|intensity_gradient");
  r.read("window", f.window);
  r.read("channels", f.channels);
  r.read("scale", f.scale);
  r.read("normalize_input", f.normalize_input);
  r.read_list("mean_rgb", f.mean_rgb);
  r.read_list("std_rgb", f.std_rgb);
  r.read_list("mean_gray", f.mean_gray);
  r.read_list("std_gray", f.std_gray);
}

void read_cost(const Reader& r, CostConfig& c) {
  r.expect_map({"kind", "max_disparity", "groups", "cat_channels", "out_of_range", "memory_cap_bytes"});
  if (r.has("kind") && r.child("kind").as<std::string>() == "interlaced")
    fail(join(r.path(), "kind"), "the interlaced layout is not supported");
  r.read_enum("kind", c.kind, parse_cost_kind, "difference|correlation|concat|gwc|combined");
  r.read("max_disparity", c.max_disparity);
  r.read("groups", c.groups);
  r.read("cat_channels", c.cat_channels);
  r.read_enum("out_of_range", c.out_of_range, parse_out_of_range, "zero_fill|max_cost");
  r.read("memory_cap_bytes", c.memory_cap_bytes);
}

void read_aggregate(const Reader& r, AggregateConfig& a) {
  r.expect_map({"method", "box_radius", "p1", "p2", "paths"});
  r.read_enum("method", a.method, parse_aggregate_method, "none|box|sgm|box_sgm");
  r.read("box_radius", a.box_radius);
  r.read("p1", a.sgm.p1);
  r.read("p2", a.sgm.p2);
  r.read("paths", a.sgm.paths);
}

void read_regress(const Reader& r, RegressionConfig& g) {
  r.expect_map({"kind", "temperature", "upsample_to_full"});
  r.read_enum("kind", g.kind, parse_regression_kind, "wta|soft_argmin|wta_parabola");
  r.read("temperature", g.temperature);
  r.read("upsample_to_full", g.upsample_to_full);
}

void read_refine(const Reader& r, RefineConfig& f) {
  r.expect_map({"lr_check", "lr_threshold", "median_radius", "fill"});
  r.read("lr_check", f.lr_check);
  r.read("lr_threshold", f.lr_threshold);
  r.read("median_radius", f.median_radius);
  r.read_enum("fill", f.fill, parse_fill_mode, "none|nearest_valid_row");
}

PipelineConfig read_pipeline(const Reader& r) {
  PipelineConfig p;
  if (r.is_null()) return p;
  r.expect_map({"feature", "cost", "aggregate", "regress", "refine"});
  if (r.has("feature")) read_feature(r.child("feature"), p.feature);
  if (r.has("cost")) read_cost(r.child("cost"), p.cost);
  if (r.has("aggregate")) read_aggregate(r.child("aggregate"), p.aggregate);
  if (r.has("regress")) read_regress(r.child("regress"), p.regress);
  if (r.has("refine")) read_refine(r.child("refine"), p.refine);
  const std::string& base = r.path();
  guard(join(base, "feature"), "feature", [&] { p.feature.validate(); });
  guard(join(base, "cost"), "cost", [&] { p.cost.validate(p.feature.output_channels()); });
  guard(join(base, "aggregate"), "sgm", [&] { p.aggregate.validate(); });
  guard(join(base, "regress"), "regress", [&] { p.regress.validate(); });
  guard(join(base, "refine"), "refine", [&] { p.refine.validate(); });
  return p;
}

MetricSpec read_eval(const Reader& r, Dataset d) {
  MetricSpec m = MetricSpec::for_dataset(d);
  if (r.is_null()) return m;
  r.expect_map({"epe", "thresholds", "mask", "d1_official"});
  r.read("epe", m.epe);
  r.read_list("thresholds", m.bad_thresholds);
  r.read_enum("mask", m.mask, parse_mask_mode, "all|noc");
  r.read("d1_official", m.d1_official);
  guard(r.path(), "eval", [&] { m.validate(); });
  return m;
}

OutputConfig read_output(const Reader& r) {
  OutputConfig o;
  if (r.is_null()) return o;
  r.expect_map({"dir", "formats", "save_disparity", "save_visualization", "colormap_max"});
  r.read("dir", o.dir);
  r.read_list("formats", o.formats);
  r.read("save_disparity", o.save_disparity);
  r.read("save_visualization", o.save_visualization);
  r.read("colormap_max", o.colormap_max);
  for (std::size_t i = 0; i < o.formats.size(); ++i)
    if (o.formats[i] != "csv" && o.formats[i] != "markdown")
      fail(r.path() + ".formats[" + std::to_string(i) + "]",
           "unknown format '" + o.formats[i] + "' (expected csv|markdown)");
  if (o.colormap_max < 0) fail(join(r.path(), "colormap_max"), "must be >= 0");
  return o;
}

AugmentStep read_step(const Reader& r) {
  if (!r.has("op")) fail(join(r.path(), "op"), "required");
  const std::string op = r.child("op").as<std::string>();
  AugmentStep step;
  if (op == "crop") {
    r.expect_map({"op", "height", "width"});
    CropStep c;
    r.read("height", c.height);
    r.read("width", c.width);
    step = c;
  } else if (op == "hflip" || op == "vflip" || op == "hsflip") {
    r.expect_map({"op", "prob"});
    FlipStep f;
    f.kind = op == "hflip"   ? FlipKind::kHorizontal
             : op == "vflip" ? FlipKind::kVertical
                             : FlipKind::kHorizontalSwap;
    r.read("prob", f.prob);
    step = f;
  } else if (op == "color") {
    r.expect_map({"op", "brightness", "contrast", "gamma_min", "gamma_max", "asymmetric", "prob"});
    ColorStep c;
    r.read("brightness", c.brightness);
    r.read("contrast", c.contrast);
    r.read("gamma_min", c.gamma_min);
    r.read("gamma_max", c.gamma_max);
    r.read("asymmetric", c.asymmetric);
    r.read("prob", c.prob);
    step = c;
  } else if (op == "erase") {
    r.expect_map({"op", "prob", "max_boxes", "min_size", "max_size"});
    EraseStep e;
    r.read("prob", e.prob);
    r.read("max_boxes", e.max_boxes);
    r.read("min_size", e.min_size);
    r.read("max_size", e.max_size);
    step = e;
  } else if (op == "scale") {
    r.expect_map({"op", "min_factor", "max_factor", "max_stretch", "prob"});
    ScaleStep s;
    r.read("min_factor", s.min_factor);
    r.read("max_factor", s.max_factor);
    r.read("max_stretch", s.max_stretch);
    r.read("prob", s.prob);
    step = s;
  } else {
    fail(join(r.path(), "op"),
         "unknown augmentation '" + op + "' (expected crop|hflip|vflip|hsflip|color|erase|scale)");
  }
  guard(r.path(), "", [&] { validate_step(step); });
  return step;
}

// --- canonical emitter ------------------------------------------------------

template <class T>
std::string num(T v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, res.ptr);
  if constexpr (std::is_floating_point_v<T>) {
    if (s.find_first_of(".einf") == std::string::npos) s += ".0";
  }
  return s;
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <class T>
std::string list(const std::vector<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    if constexpr (std::is_same_v<T, std::string>) s += v[i];
    else s += num(v[i]);
  }
  return s + "]";
}

std::string boolean(bool b) { return b ? "true" : "false"; }

class Writer {
 public:
  void open(std::string_view key) { line(std::string(key) + ":"); ++depth_; }
  void close() { --depth_; }
  void put(std::string_view key, const std::string& value) {
    line(std::string(key) + ": " + value);
  }
  // Starts a block-sequence item; the next key shares the dash line.
  void item() { pending_dash_ = true; }
  void end_item() { --depth_; }
  std::string str() const { return out_; }

 private:
  void line(const std::string& text) {
    out_.append(static_cast<std::size_t>(depth_) * 2, ' ');
    if (pending_dash_) {
      out_ += "- ";
      pending_dash_ = false;
      ++depth_;
    }
    out_ += text;
    out_ += '\n';
  }

  std::string out_;
  int depth_ = 0;
  bool pending_dash_ = false;
};

void emit_pipeline(Writer& w, const PipelineConfig& p) {
  w.open("pipeline");
  w.open("feature");
  w.put("kind", std::string(feature_kind_name(p.feature.kind)));
  w.put("window", num(p.feature.window));
  w.put("channels", num(p.feature.channels));
  w.put("scale", num(p.feature.scale));
  w.put("normalize_input", boolean(p.feature.normalize_input));
  w.put("mean_rgb", list(p.feature.mean_rgb));
  w.put("std_rgb", list(p.feature.std_rgb));
  w.put("mean_gray", list(p.feature.mean_gray));
  w.put("std_gray", list(p.feature.std_gray));
  w.close();
  w.open("cost");
  w.put("kind", std::string(cost_kind_name(p.cost.kind)));
  w.put("max_disparity", num(p.cost.max_disparity));
  w.put("groups", num(p.cost.groups));
  w.put("cat_channels", num(p.cost.cat_channels));
  w.put("out_of_range", std::string(out_of_range_name(p.cost.out_of_range)));
  w.put("memory_cap_bytes", num(p.cost.memory_cap_bytes));
  w.close();
  w.open("aggregate");
  w.put("method", std::string(aggregate_method_name(p.aggregate.method)));
  w.put("box_radius", num(p.aggregate.box_radius));
  w.put("p1", num(p.aggregate.sgm.p1));
  w.put("p2", num(p.aggregate.sgm.p2));
  w.put("paths", num(p.aggregate.sgm.paths));
  w.close();
  w.open("regress");
  w.put("kind", std::string(regression_kind_name(p.regress.kind)));
  w.put("temperature", num(p.regress.temperature));
  w.put("upsample_to_full", boolean(p.regress.upsample_to_full));
  w.close();
  w.open("refine");
  w.put("lr_check", boolean(p.refine.lr_check));
  w.put("lr_threshold", num(p.refine.lr_threshold));
  w.put("median_radius", num(p.refine.median_radius));
  w.put("fill", std::string(fill_mode_name(p.refine.fill)));
  w.close();
  w.close();
}

void emit_eval(Writer& w, const MetricSpec& m) {
  w.open("eval");
  w.put("epe", boolean(m.epe));
  w.put("thresholds", list(m.bad_thresholds));
  w.put("mask", std::string(mask_mode_name(m.mask)));
  w.put("d1_official", boolean(m.d1_official));
  w.close();
}

void emit_output(Writer& w, const OutputConfig& o) {
  w.open("output");
  w.put("dir", quote(o.dir.generic_string()));
  w.put("formats", list(o.formats));
  w.put("save_disparity", boolean(o.save_disparity));
  w.put("save_visualization", boolean(o.save_visualization));
  w.put("colormap_max", num(o.colormap_max));
  w.close();
}

void emit_step(Writer& w, const AugmentStep& step) {
  w.item();
  w.put("op", augment_step_name(step));
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, CropStep>) {
          w.put("height", num(s.height));
          w.put("width", num(s.width));
        } else if constexpr (std::is_same_v<S, FlipStep>) {
          w.put("prob", num(s.prob));
        } else if constexpr (std::is_same_v<S, ColorStep>) {
          w.put("brightness", num(s.brightness));
          w.put("contrast", num(s.contrast));
          w.put("gamma_min", num(s.gamma_min));
          w.put("gamma_max", num(s.gamma_max));
          w.put("asymmetric", boolean(s.asymmetric));
          w.put("prob", num(s.prob));
        } else if constexpr (std::is_same_v<S, EraseStep>) {
          w.put("prob", num(s.prob));
          w.put("max_boxes", num(s.max_boxes));
          w.put("min_size", num(s.min_size));
          w.put("max_size", num(s.max_size));
        } else {
          w.put("min_factor", num(s.min_factor));
          w.put("max_factor", num(s.max_factor));
          w.put("max_stretch", num(s.max_stretch));
          w.put("prob", num(s.prob));
        }
      },
      step);
  w.end_item();
}

}  // namespace

ManifestRequest DataConfig::request() const {
  ManifestRequest r;
  r.dataset = dataset;
  r.root = root;
  r.split = split;
  const std::string v = normalize_variant(dataset, variant, "data.variant");
  if (dataset == Dataset::kMiddlebury) r.resolution = parse_resolution(v);
  if (dataset == Dataset::kSceneFlow) r.pass = parse_pass(v);
  return r;
}

bool OutputConfig::wants(std::string_view format) const {
  return std::find(formats.begin(), formats.end(), format) != formats.end();
}

void RunConfig::validate() const {
  if (data.root.empty()) raise(ErrorCode::kConfig, "data.root: required");
  data.request();
  for (std::size_t i = 0; i < augment.size(); ++i)
    guard("augment[" + std::to_string(i) + "]", "", [&] { validate_step(augment[i]); });
  guard("pipeline", "", [&] { pipeline.validate(); });
  guard("eval", "eval", [&] { eval.validate(); });
}

void CrossDomainPlan::validate() const {
  if (targets.empty()) raise(ErrorCode::kConfig, "targets: the plan lists no datasets");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::string path = "targets[" + std::to_string(i) + "]";
    if (targets[i].root.empty()) raise(ErrorCode::kConfig, path + ".root: required");
    if (targets[i].dataset == Dataset::kMiddlebury && targets[i].variant != "half")
      raise(ErrorCode::kConfig, path + ".variant: Middlebury is evaluated at half resolution");
    normalize_variant(targets[i].dataset, targets[i].variant, path + ".variant");
  }
  guard("pipeline", "", [&] { pipeline.validate(); });
}

RunConfig parse_config(std::string_view yaml) {
  const Reader root(load_yaml(yaml), "");
  root.expect_map({"seed", "data", "augment", "pipeline", "eval", "output"});
  RunConfig cfg;
  root.read("seed", cfg.seed);

  if (!root.has("data")) fail("data", "required");
  const Reader data = root.child("data");
  data.expect_map({"dataset", "root", "split", "variant", "limit"});
  cfg.data.dataset = read_dataset(data);
  if (!data.has("root")) fail("data.root", "required");
  data.read("root", cfg.data.root);
  data.read_enum("split", cfg.data.split, parse_split, "train|test");
  data.read("variant", cfg.data.variant);
  cfg.data.variant = normalize_variant(cfg.data.dataset, cfg.data.variant, "data.variant");
  data.read("limit", cfg.data.limit);

  for (const Reader& item : root.child("augment").items()) cfg.augment.push_back(read_step(item));
  cfg.pipeline = read_pipeline(root.child("pipeline"));
  cfg.eval = read_eval(root.child("eval"), cfg.data.dataset);
  cfg.output = read_output(root.child("output"));
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& file) {
  return parse_config(read_text(file));
}

std::string emit_config(const RunConfig& cfg) {
  Writer w;
  w.put("seed", num(cfg.seed));
  w.open("data");
  w.put("dataset", std::string(dataset_name(cfg.data.dataset)));
  w.put("root", quote(cfg.data.root.generic_string()));
  w.put("split", std::string(split_name(cfg.data.split)));
  w.put("variant", quote(cfg.data.variant));
  w.put("limit", num(cfg.data.limit));
  w.close();
  if (cfg.augment.empty()) {
    w.put("augment", "[]");
  } else {
    w.open("augment");
    for (const AugmentStep& s : cfg.augment) emit_step(w, s);
    w.close();
  }
  emit_pipeline(w, cfg.pipeline);
  emit_eval(w, cfg.eval);
  emit_output(w, cfg.output);
  return w.str();
}

CrossDomainPlan parse_plan(std::string_view yaml) {
  const Reader root(load_yaml(yaml), "");
  root.expect_map({"seed", "pipeline", "targets", "output"});
  CrossDomainPlan plan;
  root.read("seed", plan.seed);
  plan.pipeline = read_pipeline(root.child("pipeline"));
  for (const Reader& t : root.child("targets").items()) {
    t.expect_map({"dataset", "root", "split", "variant", "limit"});
    CrossDomainTarget target;
    target.dataset = read_dataset(t);
    if (!t.has("root")) fail(join(t.path(), "root"), "required");
    t.read("root", target.root);
    t.read_enum("split", target.split, parse_split, "train|test");
    t.read("variant", target.variant);
    target.variant = normalize_variant(target.dataset, target.variant, join(t.path(), "variant"));
    t.read("limit", target.limit);
    plan.targets.push_back(std::move(target));
  }
  plan.output = read_output(root.child("output"));
  plan.validate();
  return plan;
}

CrossDomainPlan load_plan(const std::filesystem::path& file) {
  return parse_plan(read_text(file));
}

std::string emit_plan(const CrossDomainPlan& plan) {
  Writer w;
  w.put("seed", num(plan.seed));
  emit_pipeline(w, plan.pipeline);
  w.open("targets");
  for (const CrossDomainTarget& t : plan.targets) {
    w.item();
    w.put("dataset", std::string(dataset_name(t.dataset)));
    w.put("root", quote(t.root.generic_string()));
    w.put("split", std::string(split_name(t.split)));
    w.put("variant", quote(t.variant));
    w.put("limit", num(t.limit));
    w.end_item();
  }
  w.close();
  emit_output(w, plan.output);
  return w.str();
}

}  // namespace stereobench
