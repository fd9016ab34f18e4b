#include "wtree/tower_json.hpp"

#include "wtree/tree_io.hpp"

namespace wtree {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw JsonFormatError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw JsonFormatError(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_string()) throw JsonFormatError(std::string("field \"") + name + "\" must be a string");
  return v.get<std::string>();
}

const Json& array_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_array()) throw JsonFormatError(std::string("field \"") + name + "\" must be an array");
  return v;
}

int optional_int(const Json& j, const char* name, int fallback) {
  return j.contains(name) ? int_field(j, name) : fallback;
}

}  // namespace

Json model_to_json(const TowerModel& model) {
  Json j;
  j["m"] = model.m();
  j["order"] = model.declared_order();
  if (model.context().generators > 0) j["generators"] = model.context().generators;
  Json points = Json::array();
  for (const TowerPoint& p : model.points()) {
    const DecoratedTree tree = p.tree.tree();
    Json q;
    q["sign"] = p.sign;
    q["tree"] = to_string(tree);
    q["puncture"] = edge_path(tree, p.puncture);
    points.push_back(std::move(q));
  }
  j["points"] = std::move(points);
  return j;
}

TowerModel model_from_json(const Json& j) {
  const Context ctx{int_field(j, "m"), optional_int(j, "generators", 0)};
  TowerModel model(ctx, int_field(j, "order"));
  for (const Json& q : array_field(j, "points")) {
    const SignedTree parsed = parse_signed(string_field(q, "tree"), ctx);
    const int sign = int_field(q, "sign");
    if (sign != 1 && sign != -1) throw JsonFormatError("sign must be +1 or -1");
    const EdgeId edge = q.contains("puncture") ? edge_from_path(parsed.tree, string_field(q, "puncture")) : 0;
    model.add_point(SignedTree{sign * parsed.sign, parsed.tree}, edge);
  }
  return model;
}

Json raw_to_json(const RawTower& raw) {
  Json j;
  j["m"] = raw.m;
  if (raw.order) j["order"] = *raw.order;
  if (raw.generators > 0) j["generators"] = raw.generators;
  if (!raw.surface_orientations.empty()) j["surface_orientations"] = raw.surface_orientations;
  Json disks = Json::array();
  for (const RawDisk& d : raw.disks) {
    Json x;
    x["bracket"] = to_string(d.bracket);
    x["whisker"] = d.whisker.to_string();
    x["orientation"] = d.orientation;
    disks.push_back(std::move(x));
  }
  j["disks"] = std::move(disks);
  Json points = Json::array();
  for (const RawPoint& p : raw.points) {
    Json x;
    x["left"] = to_string(p.left);
    x["right"] = to_string(p.right);
    x["sign"] = p.sign;
    x["g"] = p.g.to_string();
    x["paired_by"] = p.paired_by ? Json(to_string(*p.paired_by)) : Json(nullptr);
    points.push_back(std::move(x));
  }
  j["points"] = std::move(points);
  return j;
}

RawTower raw_from_json(const Json& j) {
  RawTower raw;
  raw.m = int_field(j, "m");
  if (j.contains("order")) raw.order = int_field(j, "order");
  raw.generators = optional_int(j, "generators", 0);
  if (j.contains("surface_orientations")) {
    for (const Json& o : array_field(j, "surface_orientations")) {
      if (!o.is_number_integer()) throw JsonFormatError("surface orientations must be integers");
      raw.surface_orientations.push_back(o.get<int>());
    }
  }
  const Context ctx{raw.m, raw.generators};
  for (const Json& d : array_field(j, "disks")) {
    RawDisk disk{parse_rooted(string_field(d, "bracket"), ctx), {}, 1};
    if (d.contains("whisker")) disk.whisker = parse_word(string_field(d, "whisker"), ctx);
    disk.orientation = optional_int(d, "orientation", 1);
    raw.disks.push_back(std::move(disk));
  }
  for (const Json& p : array_field(j, "points")) {
    RawPoint point{parse_rooted(string_field(p, "left"), ctx), parse_rooted(string_field(p, "right"), ctx),
                   int_field(p, "sign"), {}, std::nullopt};
    if (p.contains("g")) point.g = parse_word(string_field(p, "g"), ctx);
    if (p.contains("paired_by") && !p.at("paired_by").is_null()) {
      point.paired_by = parse_rooted(string_field(p, "paired_by"), ctx);
    }
    raw.points.push_back(std::move(point));
  }
  return raw;
}

TowerModel tower_from_json(const Json& j) {
  if (j.is_object() && j.contains("disks")) return extract_model(raw_from_json(j));
  return model_from_json(j);
}

namespace {

std::string path_in(const TowerModel& state, int point, EdgeId edge) {
  if (!state.contains(point)) return "?";
  const DecoratedTree tree = state.point(point).tree.tree();
  if (edge < 0 || edge >= tree.edge_count()) return "?";
  return edge_path(tree, edge);
}

EdgeId edge_in(const TowerModel& state, int point, const std::string& path) {
  if (!state.contains(point)) return -1;
  try {
    return edge_from_path(state.point(point).tree.tree(), path);
  } catch (const std::invalid_argument&) {
    return -1;
  }
}

}  // namespace

Json certificate_to_json(const TowerModel& model, const MoveCertificate& cert) {
  Json out = Json::array();
  std::optional<TowerModel> state = model;
  for (const Move& move : cert.moves) {
    Json r;
    if (const auto* m = std::get_if<IhxInsertMove>(&move)) {
      r["move"] = "ihx_insert";
      r["sign"] = m->sign;
      r["subtrees"] = {to_string(m->triple.a), to_string(m->triple.b), to_string(m->triple.c), to_string(m->triple.d)};
      r["I"] = to_string(m->triple.i_tree());
      r["H"] = to_string(m->triple.h_tree());
      r["X"] = to_string(m->triple.x_tree());
    } else if (const auto* m = std::get_if<IhxSplitMove>(&move)) {
      r["move"] = "ihx_split";
      r["point"] = m->point;
      r["edge"] = state ? path_in(*state, m->point, m->edge) : "?";
      r["flip"] = m->flip;
    } else if (const auto* m = std::get_if<PunctureMove>(&move)) {
      r["move"] = "puncture";
      r["point"] = m->point;
      r["edge"] = state ? path_in(*state, m->point, m->edge) : "?";
    } else if (const auto* m = std::get_if<CancelPairMove>(&move)) {
      r["move"] = "cancel";
      r["points"] = {m->p, m->q};
    }
    out.push_back(std::move(r));
    if (state) {
      try {
        state = apply_move(*state, move);
      } catch (const std::exception&) {
        state.reset();
      }
    }
  }
  return out;
}

MoveCertificate certificate_from_json(const TowerModel& model, const Json& j) {
  if (!j.is_array()) throw JsonFormatError("a certificate is an array of moves");
  MoveCertificate cert;
  std::optional<TowerModel> state = model;
  const Context ctx{model.m(), model.context().generators};
  for (const Json& r : j) {
    const std::string kind = string_field(r, "move");
    Move move = CancelPairMove{};
    if (kind == "ihx_insert") {
      const Json& subs = array_field(r, "subtrees");
      if (subs.size() != 4) throw JsonFormatError("ihx_insert needs four subtrees");
      std::vector<RootedTree> t;
      for (const Json& s : subs) {
        if (!s.is_string()) throw JsonFormatError("subtrees must be strings");
        t.push_back(parse_rooted(s.get<std::string>(), ctx));
      }
      move = IhxInsertMove{IhxTriple{t[0], t[1], t[2], t[3]}, int_field(r, "sign")};
    } else if (kind == "ihx_split") {
      const int point = int_field(r, "point");
      const EdgeId edge = state ? edge_in(*state, point, string_field(r, "edge")) : -1;
      const Json& flip = field(r, "flip");
      if (!flip.is_boolean()) throw JsonFormatError("flip must be a boolean");
      move = IhxSplitMove{point, edge, flip.get<bool>()};
    } else if (kind == "puncture") {
      const int point = int_field(r, "point");
      move = PunctureMove{point, state ? edge_in(*state, point, string_field(r, "edge")) : -1};
    } else if (kind == "cancel") {
      const Json& pts = array_field(r, "points");
      if (pts.size() != 2 || !pts[0].is_number_integer() || !pts[1].is_number_integer()) {
        throw JsonFormatError("cancel needs two point ids");
      }
      move = CancelPairMove{pts[0].get<int>(), pts[1].get<int>()};
    } else {
      throw JsonFormatError("unknown move \"" + kind + "\"");
    }
    if (state) {
      try {
        state = apply_move(*state, move);
      } catch (const std::exception&) {
        state.reset();
      }
    }
    cert.moves.push_back(std::move(move));
  }
  return cert;
}

}  // namespace wtree
