#include "resinv/frame.hpp"

#include <algorithm>

#include "resinv/errors.hpp"

namespace resinv {

void Frame::validate() const {
  std::vector<int> seen(names.size(), 0);
  for (int i : u) {
    if (i < 0 || i >= nvars()) throw PreconditionError("frame index out of range");
    ++seen[i];
  }
  for (int i : y) {
    if (i < 0 || i >= nvars()) throw PreconditionError("frame index out of range");
    ++seen[i];
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != 1) throw PreconditionError("u and y must partition the variables (check '" + names[i] + "')");
}

int Frame::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

bool Frame::in_u(int var) const { return std::find(u.begin(), u.end(), var) != u.end(); }
bool Frame::in_y(int var) const { return std::find(y.begin(), y.end(), var) != y.end(); }

int Frame::u_position(int var) const {
  auto it = std::find(u.begin(), u.end(), var);
  return it == u.end() ? -1 : static_cast<int>(it - u.begin());
}

Frame make_frame(const std::vector<std::string>& names, const std::vector<std::string>& u_names,
                 const std::vector<std::string>& y_names) {
  Frame f;
  f.names = names;
  auto lookup = [&](const std::string& n) {
    int i = f.index_of(n);
    if (i < 0) throw PreconditionError("undeclared variable '" + n + "' in frame");
    return i;
  };
  for (const auto& n : u_names) f.u.push_back(lookup(n));
  for (const auto& n : y_names) f.y.push_back(lookup(n));
  f.validate();
  return f;
}

Frame move_to_u(const Frame& f, int var) {
  Frame g = f;
  if (g.in_u(var)) return g;
  g.y.erase(std::remove(g.y.begin(), g.y.end(), var), g.y.end());
  g.u.push_back(var);
  return g;
}

Frame move_to_y(const Frame& f, int var) {
  Frame g = f;
  if (g.in_y(var)) return g;
  g.u.erase(std::remove(g.u.begin(), g.u.end(), var), g.u.end());
  g.y.push_back(var);
  return g;
}

}  // namespace resinv
