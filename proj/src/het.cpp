#include "hetcat/het.hpp"

namespace hetcat {

int HetBifunctor::element_index(std::string_view name) const {
  auto it = elem_ix_.find(std::string(name));
  return it == elem_ix_.end() ? -1 : it->second;
}

int HetBifunctor::require_element(std::string_view name) const {
  int ix = element_index(name);
  if (ix < 0) throw DomainError("unknown het element '" + std::string(name) + "' in het " + name_);
  return ix;
}

const std::vector<int>& HetBifunctor::set_ixs(int src_ix, int dst_ix) const {
  return sets_[src_ix * receiving_.object_count() + dst_ix];
}

std::vector<std::string> HetBifunctor::het_set(const std::string& src, const std::string& dst) const {
  int s = sending_.require_object(src);
  int d = receiving_.require_object(dst);
  std::vector<std::string> out;
  for (int e : set_ixs(s, d)) out.push_back(elements_[e].name);
  return out;
}

std::string HetBifunctor::act_left(const std::string& k, const std::string& d) const {
  int k_ix = receiving_.require_morphism(k);
  int e_ix = require_element(d);
  if (receiving_.morphism(k_ix).dom != elements_[e_ix].dst) {
    throw DomainError("cannot post-compose: dst(" + d + ")=" +
                      receiving_.object_name(elements_[e_ix].dst) + " but dom(" + k + ")=" +
                      receiving_.object_name(receiving_.morphism(k_ix).dom));
  }
  int r = act_left_ix(k_ix, e_ix);
  if (r < 0) throw IntegrityError("left action has no entry for (" + k + ", " + d + ")");
  return elements_[r].name;
}

std::string HetBifunctor::act_right(const std::string& d, const std::string& h) const {
  int e_ix = require_element(d);
  int h_ix = sending_.require_morphism(h);
  if (sending_.morphism(h_ix).cod != elements_[e_ix].src) {
    throw DomainError("cannot pre-compose: src(" + d + ")=" +
                      sending_.object_name(elements_[e_ix].src) + " but cod(" + h + ")=" +
                      sending_.object_name(sending_.morphism(h_ix).cod));
  }
  int r = act_right_ix(e_ix, h_ix);
  if (r < 0) throw IntegrityError("right action has no entry for (" + d + ", " + h + ")");
  return elements_[r].name;
}

std::string HetBifunctor::act(const std::string& k, const std::string& d, const std::string& h) const {
  return act_left(k, act_right(d, h));
}

bool HetBifunctor::operator==(const HetBifunctor& other) const {
  return sending_ == other.sending_ && receiving_ == other.receiving_ &&
         elements_ == other.elements_ && act_left_ == other.act_left_ &&
         act_right_ == other.act_right_;
}

HetSpec HetBifunctor::to_spec() const {
  HetSpec spec;
  spec.name = name_;
  spec.sending = sending_.name();
  spec.receiving = receiving_.name();
  for (const Element& e : elements_) {
    spec.elements.push_back(
        HetElementDecl{e.name, sending_.object_name(e.src), receiving_.object_name(e.dst)});
  }
  // Entries whose target set is a singleton are forced and re-synthesized
  // by make_het, so the canonical spec form omits them.
  const int nElem = element_count();
  for (int k = 0; k < receiving_.morphism_count(); ++k) {
    for (int e = 0; e < nElem; ++e) {
      int r = act_left_[k * nElem + e];
      if (r < 0) continue;
      if (set_ixs(elements_[e].src, receiving_.morphism(k).cod).size() == 1) continue;
      spec.act_left[{receiving_.morphism(k).name, elements_[e].name}] = elements_[r].name;
    }
  }
  for (int h = 0; h < sending_.morphism_count(); ++h) {
    for (int e = 0; e < nElem; ++e) {
      int r = act_right_[h * nElem + e];
      if (r < 0) continue;
      if (set_ixs(sending_.morphism(h).dom, elements_[e].dst).size() == 1) continue;
      spec.act_right[{elements_[e].name, sending_.morphism(h).name}] = elements_[r].name;
    }
  }
  return spec;
}

Result<HetBifunctor> make_het(const FinCategory& sending, const FinCategory& receiving,
                              const HetSpec& spec) {
  ValidationReport report;

  HetBifunctor het;
  het.name_ = spec.name;
  het.sending_ = sending;
  het.receiving_ = receiving;

  for (const HetElementDecl& e : spec.elements) {
    int s = sending.object_index(e.src);
    int d = receiving.object_index(e.dst);
    if (s < 0) report.add("unknown-object", {e.name, "src", e.src});
    if (d < 0) report.add("unknown-object", {e.name, "dst", e.dst});
    if (!het.elem_ix_.emplace(e.name, static_cast<int>(het.elements_.size())).second) {
      report.add("duplicate-element", {e.name});
    }
    het.elements_.push_back(HetBifunctor::Element{e.name, s, d});
  }
  for (const auto& [pair, res] : spec.act_left) {
    if (receiving.morphism_index(pair.first) < 0) report.add("unknown-morphism", {"lact", pair.first});
    if (!het.elem_ix_.count(pair.second)) report.add("unknown-element", {"lact", pair.second});
    if (!het.elem_ix_.count(res)) report.add("unknown-element", {"lact-result", res});
  }
  for (const auto& [pair, res] : spec.act_right) {
    if (!het.elem_ix_.count(pair.first)) report.add("unknown-element", {"ract", pair.first});
    if (sending.morphism_index(pair.second) < 0) report.add("unknown-morphism", {"ract", pair.second});
    if (!het.elem_ix_.count(res)) report.add("unknown-element", {"ract-result", res});
  }
  if (!report.ok()) return report;

  const int nElem = het.element_count();
  const int nSend = sending.morphism_count();
  const int nRecv = receiving.morphism_count();

  het.sets_.assign(static_cast<size_t>(sending.object_count()) * receiving.object_count(), {});
  for (int e = 0; e < nElem; ++e) {
    het.sets_[het.elements_[e].src * receiving.object_count() + het.elements_[e].dst].push_back(e);
  }

  het.act_left_.assign(static_cast<size_t>(nRecv) * nElem, -1);
  het.act_right_.assign(static_cast<size_t>(nSend) * nElem, -1);

  for (const auto& [pair, res] : spec.act_left) {
    int k = receiving.morphism_index(pair.first);
    int e = het.elem_ix_.at(pair.second);
    if (receiving.morphism(k).dom != het.elements_[e].dst) {
      report.add("action-boundary", {"lact", pair.first, pair.second});
      continue;
    }
    het.act_left_[k * nElem + e] = het.elem_ix_.at(res);
  }
  for (const auto& [pair, res] : spec.act_right) {
    int e = het.elem_ix_.at(pair.first);
    int h = sending.morphism_index(pair.second);
    if (sending.morphism(h).cod != het.elements_[e].src) {
      report.add("action-boundary", {"ract", pair.first, pair.second});
      continue;
    }
    het.act_right_[h * nElem + e] = het.elem_ix_.at(res);
  }

  // Fill gaps whose target set is a singleton: in the monotone-relation
  // case every action is forced, so only the relation needs declaring.
  for (int k = 0; k < nRecv; ++k) {
    for (int e = 0; e < nElem; ++e) {
      if (receiving.morphism(k).dom != het.elements_[e].dst) continue;
      if (het.act_left_[k * nElem + e] >= 0) continue;
      const auto& target = het.set_ixs(het.elements_[e].src, receiving.morphism(k).cod);
      if (target.size() == 1) {
        het.act_left_[k * nElem + e] = target[0];
      } else {
        report.add("action-missing", {"lact", receiving.morphism(k).name, het.elements_[e].name});
      }
    }
  }
  for (int h = 0; h < nSend; ++h) {
    for (int e = 0; e < nElem; ++e) {
      if (sending.morphism(h).cod != het.elements_[e].src) continue;
      if (het.act_right_[h * nElem + e] >= 0) continue;
      const auto& target = het.set_ixs(sending.morphism(h).dom, het.elements_[e].dst);
      if (target.size() == 1) {
        het.act_right_[h * nElem + e] = target[0];
      } else {
        report.add("action-missing", {"ract", het.elements_[e].name, sending.morphism(h).name});
      }
    }
  }
  if (!report.ok()) return report;

  // Landing sets: k.d lives in Het(src d, cod k) and d.h in Het(dom h, dst d).
  for (int k = 0; k < nRecv; ++k) {
    for (int e = 0; e < nElem; ++e) {
      int r = het.act_left_[k * nElem + e];
      if (r < 0) continue;
      if (het.elements_[r].src != het.elements_[e].src ||
          het.elements_[r].dst != receiving.morphism(k).cod) {
        report.add("action-landing", {"lact", receiving.morphism(k).name, het.elements_[e].name,
                                      "=", het.elements_[r].name});
      }
    }
  }
  for (int h = 0; h < nSend; ++h) {
    for (int e = 0; e < nElem; ++e) {
      int r = het.act_right_[h * nElem + e];
      if (r < 0) continue;
      if (het.elements_[r].src != sending.morphism(h).dom ||
          het.elements_[r].dst != het.elements_[e].dst) {
        report.add("action-landing", {"ract", het.elements_[e].name, sending.morphism(h).name,
                                      "=", het.elements_[r].name});
      }
    }
  }
  if (!report.ok()) return report;

  // Identity actions.
  for (int e = 0; e < nElem; ++e) {
    int id_dst = receiving.identity_ix(het.elements_[e].dst);
    if (het.act_left_[id_dst * nElem + e] != e) {
      report.add("identity-action", {"lact", receiving.morphism(id_dst).name, het.elements_[e].name});
    }
    int id_src = sending.identity_ix(het.elements_[e].src);
    if (het.act_right_[id_src * nElem + e] != e) {
      report.add("identity-action", {"ract", het.elements_[e].name, sending.morphism(id_src).name});
    }
  }

  // Functoriality of the left action: (k'.k).d = k'.(k.d).
  for (int e = 0; e < nElem; ++e) {
    for (int k = 0; k < nRecv; ++k) {
      if (receiving.morphism(k).dom != het.elements_[e].dst) continue;
      int kd = het.act_left_[k * nElem + e];
      for (int k2 = 0; k2 < nRecv; ++k2) {
        if (receiving.morphism(k2).dom != receiving.morphism(k).cod) continue;
        int comp = receiving.compose_ix(k2, k);
        if (het.act_left_[comp * nElem + e] != het.act_left_[k2 * nElem + kd]) {
          report.add("left-functoriality", {receiving.morphism(k2).name, receiving.morphism(k).name,
                                            het.elements_[e].name});
        }
      }
    }
  }

  // Functoriality of the right action: d.(h.h') = (d.h).h'.
  for (int e = 0; e < nElem; ++e) {
    for (int h = 0; h < nSend; ++h) {
      if (sending.morphism(h).cod != het.elements_[e].src) continue;
      int dh = het.act_right_[h * nElem + e];
      for (int h2 = 0; h2 < nSend; ++h2) {
        if (sending.morphism(h2).cod != sending.morphism(h).dom) continue;
        int comp = sending.compose_ix(h, h2);
        if (het.act_right_[h2 * nElem + dh] != het.act_right_[comp * nElem + e]) {
          report.add("right-functoriality", {het.elements_[e].name, sending.morphism(h).name,
                                             sending.morphism(h2).name});
        }
      }
    }
  }

  // Mixed associativity: (k.d).h = k.(d.h).
  for (int e = 0; e < nElem; ++e) {
    for (int k = 0; k < nRecv; ++k) {
      if (receiving.morphism(k).dom != het.elements_[e].dst) continue;
      int kd = het.act_left_[k * nElem + e];
      for (int h = 0; h < nSend; ++h) {
        if (sending.morphism(h).cod != het.elements_[e].src) continue;
        int dh = het.act_right_[h * nElem + e];
        if (het.act_right_[h * nElem + kd] != het.act_left_[k * nElem + dh]) {
          report.add("(kd)h=k(dh)", {receiving.morphism(k).name, het.elements_[e].name,
                                     sending.morphism(h).name});
        }
      }
    }
  }

  if (!report.ok()) return report;
  return het;
}

Result<HetBifunctor> make_relation_het(const std::string& name, const FinCategory& sending,
                                       const FinCategory& receiving,
                                       const std::vector<std::pair<std::string, std::string>>& related) {
  HetSpec spec;
  spec.name = name;
  spec.sending = sending.name();
  spec.receiving = receiving.name();
  for (const auto& [x, a] : related) {
    spec.elements.push_back(HetElementDecl{"u_" + x + "_" + a, x, a});
  }
  return make_het(sending, receiving, spec);
}

}  // namespace hetcat
