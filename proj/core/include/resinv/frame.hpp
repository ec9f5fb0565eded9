#ifndef RESINV_FRAME_HPP
#define RESINV_FRAME_HPP

#include <string>
#include <vector>

namespace resinv {

// Ordered variables with a (u | y) split. The point is always the origin.
struct Frame {
  std::vector<std::string> names;
  std::vector<int> u;
  std::vector<int> y;

  int nvars() const { return static_cast<int>(names.size()); }
  // Throws PreconditionError unless u and y partition the variables.
  void validate() const;
  int index_of(const std::string& name) const;  // -1 when absent
  bool in_u(int var) const;
  bool in_y(int var) const;
  // Position of `var` inside u, or -1.
  int u_position(int var) const;

  friend bool operator==(const Frame&, const Frame&) = default;
};

Frame make_frame(const std::vector<std::string>& names, const std::vector<std::string>& u_names,
                 const std::vector<std::string>& y_names);

// Same variables with `var` moved to the end of the other part.
Frame move_to_u(const Frame& f, int var);
Frame move_to_y(const Frame& f, int var);

}  // namespace resinv

#endif
