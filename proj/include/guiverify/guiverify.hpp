#pragma once

// Umbrella header for the full pipeline: screen model and ingestion,
// perceptual differencing, component matching, violation detection,
// reporting, and the ground-truth injection corpus.

#include "guiverify/color.hpp"
#include "guiverify/config.hpp"
#include "guiverify/detection.hpp"
#include "guiverify/error.hpp"
#include "guiverify/fixture.hpp"
#include "guiverify/geometry.hpp"
#include "guiverify/html_report.hpp"
#include "guiverify/image.hpp"
#include "guiverify/injector.hpp"
#include "guiverify/matching.hpp"
#include "guiverify/meta.hpp"
#include "guiverify/percept.hpp"
#include "guiverify/png_io.hpp"
#include "guiverify/report.hpp"
#include "guiverify/screen.hpp"
#include "guiverify/suite_io.hpp"
#include "guiverify/text_metrics.hpp"
#include "guiverify/version.hpp"
#include "guiverify/violations.hpp"
