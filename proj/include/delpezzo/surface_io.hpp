/*
   Copyright 2026 The delpezzo authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DELPEZZO_SURFACE_IO_HPP
#define DELPEZZO_SURFACE_IO_HPP

#include <string>
#include <vector>

#include "delpezzo/cubic.hpp"

namespace delpezzo::io {

// Parsed surface file.  kind "cubic" carries one coefficient block (degree-3
// tuples of length 4); kind "dp4" carries two blocks (degree-2 tuples of
// length 5).
struct SurfaceFile {
  std::string kind;
  int p = 2;
  int r = 1;
  std::vector<int> gen_poly;                              // ascending; {0,1} when r = 1
  std::vector<std::vector<cubic::SurfaceTerm>> blocks;    // 1 for cubic, 2 for dp4
  std::string name;                                       // optional
};

SurfaceFile parse_surface_json(const std::string& text);
std::string surface_to_json(const SurfaceFile& sf);

cubic::CubicSurface make_cubic(const SurfaceFile& sf, int cap = ffield::FieldCtx::kDefaultCap);
std::unique_ptr<cubic::CubicSurface> make_cubic_ptr(const SurfaceFile& sf,
                                                    int cap = ffield::FieldCtx::kDefaultCap);

// Bundled fixtures (surface files as JSON).
std::vector<std::string> fixture_names();
const std::string& fixture_json(const std::string& name);

}  // namespace delpezzo::io

#endif  // DELPEZZO_SURFACE_IO_HPP
