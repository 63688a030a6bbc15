namespace eirep {
}
