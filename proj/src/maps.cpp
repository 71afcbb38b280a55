// The birational maps are header templates (gcl/maps.hpp); this translation
// unit anchors the target.
#include "gcl/maps.hpp"
